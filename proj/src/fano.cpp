#include "sasakit/fano.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sasakit/errors.hpp"

namespace sasakit {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

}  // namespace

FanoBaseSpec FanoBaseSpec::make(std::vector<SpectrumEntry> entries, std::string label) {
  if (entries.empty()) throw EmptySpec("spec has no eigenvalue entries");
  const BigRational one(1);
  for (const auto& e : entries) {
    if (e.multiplicity < 1) throw SpecParseError("multiplicity must be >= 1");
    if (e.mu.abs() >= one) {
      throw EigenvalueOutOfRange("eigenvalue " + e.mu.str() + " outside (-1, 1)");
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.mu < b.mu; });
  std::vector<SpectrumEntry> merged;
  for (auto& e : entries) {
    if (!merged.empty() && merged.back().mu == e.mu) {
      merged.back().multiplicity += e.multiplicity;
    } else {
      merged.push_back(std::move(e));
    }
  }
  FanoBaseSpec spec;
  spec.entries_ = std::move(merged);
  spec.label_ = std::move(label);
  for (const auto& e : spec.entries_) spec.dimension_ += e.multiplicity;
  return spec;
}

FanoBaseSpec product_projective_spaces(const std::vector<int>& dims,
                                       const std::vector<int>& twists) {
  if (dims.size() != twists.size()) {
    throw SpecParseError("product_projective_spaces: dims and twists differ in length");
  }
  if (dims.empty()) throw EmptySpec("product_projective_spaces: no factors");
  std::vector<SpectrumEntry> entries;
  for (size_t i = 0; i < dims.size(); ++i) {
    const int n = dims[i];
    const int v = twists[i];
    if (n < 1) throw SpecParseError("projective factor dimension must be >= 1");
    if (v <= -(n + 1) || v >= n + 1) {
      throw EigenvalueOutOfRange("twist " + std::to_string(v) + " violates -(n+1) < nu < n+1 for n = " +
                                 std::to_string(n));
    }
    entries.push_back({BigRational(v, n + 1), n});
  }
  std::string label = "P^" + join_ints(dims) + ", nu=(" + join_ints(twists) + ")";
  return FanoBaseSpec::make(std::move(entries), std::move(label));
}

FanoBaseSpec grassmannian(int k, int p, int twist) {
  if (p < 1 || p > k - 1) throw SpecParseError("grassmannian: requires 1 <= p <= k-1");
  if (twist <= -k || twist >= k) {
    throw EigenvalueOutOfRange("twist " + std::to_string(twist) + " violates -k < nu < k for k = " +
                               std::to_string(k));
  }
  std::string label = "Gr(" + std::to_string(k) + "," + std::to_string(p) + "), nu=" +
                      std::to_string(twist);
  if (p >= 2 && p <= k - 2) label += " [non-toric]";
  return FanoBaseSpec::make({{BigRational(twist, k), p * (k - p)}}, std::move(label));
}

FanoBaseSpec fermat_hypersurface(int n) {
  if (n < 3) throw SpecParseError("fermat_hypersurface: requires n >= 3");
  std::string label = "KE hypersurface of degree " + std::to_string(n) + " in P^" +
                      std::to_string(n + 1) + ", L=O(1)";
  return FanoBaseSpec::make({{BigRational(1, 2), n}}, std::move(label));
}

std::string FanoBaseSpec::to_json_string(int indent) const {
  nlohmann::ordered_json j;
  j["label"] = label_;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    j["entries"].push_back({{"mu", e.mu.str()}, {"multiplicity", e.multiplicity}});
  }
  return j.dump(indent);
}

FanoBaseSpec FanoBaseSpec::from_json_string(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SpecParseError(std::string("invalid spec JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw SpecParseError("spec JSON must be an object with an \"entries\" array");
  }
  std::vector<SpectrumEntry> entries;
  for (const auto& e : j["entries"]) {
    if (!e.is_object() || !e.contains("mu") || !e.contains("multiplicity") ||
        !e["mu"].is_string() || !e["multiplicity"].is_number_integer()) {
      throw SpecParseError("each entry needs a fraction string \"mu\" and an integer \"multiplicity\"");
    }
    BigRational mu;
    try {
      mu = BigRational::from_string(e["mu"].get<std::string>());
    } catch (const std::invalid_argument& ex) {
      throw SpecParseError(std::string("bad eigenvalue fraction: ") + ex.what());
    }
    entries.push_back({std::move(mu), e["multiplicity"].get<int>()});
  }
  std::string label = j.value("label", std::string{});
  return FanoBaseSpec::make(std::move(entries), std::move(label));
}

FanoBaseSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("cannot open spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return FanoBaseSpec::from_json_string(buf.str());
}

namespace {

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw SpecParseError("bad integer '" + tok + "' in " + what);
    }
  }
  if (out.empty()) throw SpecParseError("empty list in " + what);
  return out;
}

}  // namespace

FanoBaseSpec parse_spec_source(const std::string& source) {
  if (source == "dp1") return product_projective_spaces({1}, {1});
  if (source.starts_with("pp:")) {
    const std::string body = source.substr(3);
    const size_t slash = body.find('/');
    if (slash == std::string::npos) {
      throw SpecParseError("pp spec needs the form pp:n1,n2,../v1,v2,..");
    }
    return product_projective_spaces(parse_int_list(body.substr(0, slash), "pp dims"),
                                     parse_int_list(body.substr(slash + 1), "pp twists"));
  }
  if (source.starts_with("gr:")) {
    const auto v = parse_int_list(source.substr(3), "gr parameters");
    if (v.size() != 3) throw SpecParseError("gr spec needs the form gr:k,p,v");
    return grassmannian(v[0], v[1], v[2]);
  }
  if (source.starts_with("fermat:")) {
    const auto v = parse_int_list(source.substr(7), "fermat parameter");
    if (v.size() != 1) throw SpecParseError("fermat spec needs the form fermat:n");
    return fermat_hypersurface(v[0]);
  }
  if (std::filesystem::exists(source)) return load_spec_file(source);
  throw SpecParseError("unrecognized spec source '" + source +
                       "' (not a file, not pp:/gr:/fermat:/dp1)");
}

std::ostream& operator<<(std::ostream& os, const FanoBaseSpec& spec) {
  os << (spec.label().empty() ? "spec" : spec.label()) << " {";
  for (size_t i = 0; i < spec.entries().size(); ++i) {
    if (i) os << ", ";
    os << "(" << spec.entries()[i].mu << " x" << spec.entries()[i].multiplicity << ")";
  }
  return os << "}";
}

}  // namespace sasakit
