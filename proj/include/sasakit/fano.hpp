#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sasakit/rational.hpp"

namespace sasakit {

struct SpectrumEntry {
  BigRational mu;
  int multiplicity = 1;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

// Spectral data of a polarized Kahler-Einstein Fano base (W, L): the constant
// eigenvalues mu_1 <= ... <= mu_n of the curvature form of L with respect to
// the Kahler-Einstein form on W, each strictly inside (-1, 1). Entries are
// kept in normal form: sorted ascending by mu with equal eigenvalues merged,
// so two specs are value-equal iff they describe the same spectrum.
class FanoBaseSpec {
public:
  // Empty placeholder; every validated spec comes from make() or a catalog
  // constructor.
  FanoBaseSpec() = default;

  // Validates, sorts, and merges. Throws EmptySpec or EigenvalueOutOfRange.
  static FanoBaseSpec make(std::vector<SpectrumEntry> entries, std::string label = {});

  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  int dimension() const { return dimension_; }  // n = sum of multiplicities
  const std::string& label() const { return label_; }

  // Equality is spectral: labels are provenance only.
  friend bool operator==(const FanoBaseSpec& a, const FanoBaseSpec& b) {
    return a.entries_ == b.entries_;
  }

  std::string to_json_string(int indent = 2) const;
  static FanoBaseSpec from_json_string(std::string_view text);

private:
  std::vector<SpectrumEntry> entries_;
  int dimension_ = 0;
  std::string label_;
};

// W = P^{n_1} x ... x P^{n_l}, L the twist O(nu_1, ..., nu_l): each factor
// contributes the eigenvalue nu_i/(n_i+1) with multiplicity n_i. Requires
// -(n_i+1) < nu_i < n_i+1.
FanoBaseSpec product_projective_spaces(const std::vector<int>& dims,
                                       const std::vector<int>& twists);

// W = Gr(k, p), L the nu-th power of the ample generator A(k, p). Since the
// anticanonical bundle is A(k, p)^k and the Kahler-Einstein form represents
// its curvature class, the eigenvalues of L are all nu/k, with multiplicity
// dim Gr(k, p) = p(k-p). Requires 1 <= p <= k-1 and -k < nu < k. For
// 2 <= p <= k-2 the associated S^1-bundle is non-toric.
FanoBaseSpec grassmannian(int k, int p, int twist);

// W a smooth degree-n hypersurface in P^{n+1} admitting a Kahler-Einstein
// metric (e.g. Fermat), L = O(1)|_W. By adjunction K_W = O(-2)|_W, so
// L^2 = K_W^{-1} and every eigenvalue of L is 1/2, with multiplicity n.
// Requires n >= 3.
FanoBaseSpec fermat_hypersurface(int n);

// Resolves a CLI spec source: a path to a spec JSON file, or a catalog
// string "pp:n1,n2/v1,v2", "gr:k,p,v", "fermat:n", or the alias "dp1"
// (= pp:1/1). Throws SpecParseError when nothing matches.
FanoBaseSpec parse_spec_source(const std::string& source);

// Loads a spec from a JSON file (schema: {"label": str, "entries":
// [{"mu": "p/q", "multiplicity": int}]}).
FanoBaseSpec load_spec_file(const std::string& path);

std::ostream& operator<<(std::ostream& os, const FanoBaseSpec& spec);

}  // namespace sasakit
