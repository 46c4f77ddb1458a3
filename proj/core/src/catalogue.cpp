#include "umbra/identities.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <string>

#include "umbra/errors.hpp"

namespace umbra {

namespace {

using Id = IdentityId;

constexpr std::string_view kDomainAK = "n >= 0, integer k, rational a != 0";
constexpr std::string_view kDomainAK1 = "n >= 1, integer k, rational a != 0";
constexpr std::string_view kDomainS = "n >= 0, integer k, rational a != 0, integer s >= 0";
constexpr std::string_view kDomainSL = "n >= 0, integer k, rational a != 0, integer s >= 0, rational lambda != 1";
constexpr std::string_view kDomainM = "1 <= m <= n, integer k, rational a != 0";

const std::array<IdentityInfo, 30> kCatalogue{{
    {Id::T1, "T1", "Theorem 1", "PC_n^(k)(x:a) = sum_l C_l^(k)(x) C(n,l) (-1)^(n-l) / a^l", kDomainAK,
     "LHS by generating-function extraction; RHS from poly-Cauchy polynomials of the first kind", false, 0},
    {Id::P2, "P2", "Proposition 2", "PC_n^(k)(x:a) = sum_l C(n,l) C_(n-l)^(k) / a^(n-l) C_l(-x:a)", kDomainAK,
     "RHS from poly-Cauchy numbers and Poisson-Charlier polynomials evaluated at -x", false, 0},
    {Id::E30, "E30", "Eq. (30)", "PC^_n^(k)(x:a) = sum_l (-1)^(n-l) C(n,l) / a^l C^_l^(k)(x)", kDomainAK,
     "RHS from poly-Cauchy polynomials of the second kind", false, 0},
    {Id::E31, "E31", "Eq. (31)", "PC^_n^(k)(x:a) = sum_l C(n,l) C^_l^(k) / a^l C_(n-l)(x:a)", kDomainAK,
     "RHS from poly-Cauchy numbers of the second kind and Poisson-Charlier polynomials", false, 0},
    {Id::T3, "T3", "Theorem 3",
     "PC_n^(k)(x:a) = a^-n sum_j { sum_(m=j..n) sum_(l=0..n-m) (-1)^(l+j) C(n,l) C(m,j) a^l / (m-j+1)^k "
     "S1(n-l,m) } x^j",
     kDomainAK, "RHS coefficient-by-coefficient from signed Stirling numbers of the first kind", false, 0},
    {Id::T3H, "T3H", "Remark after Theorem 3",
     "PC^_n^(k)(x:a) = a^-n sum_j { sum_m sum_l (-1)^(l+m+j) C(n,l) C(m,j) a^l / (m-j+1)^k S1(n-l,m) } x^j",
     kDomainAK, "RHS coefficient-by-coefficient from signed Stirling numbers of the first kind", false, 0},
    {Id::T4, "T4", "Theorem 4",
     "PC_n^(k)(x:a) = sum_l { sum_(r=0..n-l) (-1)^l / a^(n-r) C(n,r) S1(n-r,l) PC_r^(k)(0:a) } x^l", kDomainAK,
     "RHS from Stirling numbers and the values PC_r^(k)(0:a)", false, 0},
    {Id::E41, "E41", "Eq. (41)",
     "PC^_n^(k)(x:a) = sum_l { sum_r C(n,r) / a^(n-r) S1(n-r,l) PC^_r^(k)(0:a) } x^l", kDomainAK,
     "RHS from Stirling numbers and the values PC^_r^(k)(0:a)", false, 0},
    {Id::T5, "T5", "Theorem 5",
     "PC_n^(k)(x:a) = a^-n sum_m { sum_r sum_l sum_j (-1)^(l+m) C(n-1,r) C(n-r,j+l) C(n-r-j-l,m) "
     "a^l S2(j+l,l) / (n-r-j-l-m+1)^k B_r^(n) } x^m",
     kDomainAK1, "RHS from Stirling numbers of the second kind and Bernoulli numbers of order n", false, 1},
    {Id::E48, "E48", "Eq. (48)",
     "PC^_n^(k)(x:a) = (-1/a)^n sum_m [ sum_r sum_l sum_j (-1)^(r+j+m) C(n-1,r) C(n-r,j+l) / "
     "(n-r-j-l-m+1)^k C(n-r-j-l,m) a^l S2(j+l,l) B_r^(n) ] x^m",
     kDomainAK1, "RHS from Stirling numbers of the second kind and Bernoulli numbers of order n", false, 1},
    {Id::E49, "E49", "Eq. (49)",
     "PC_n^(k)(x+y:a) = sum_j C(n,j) PC_j^(k)(x:a) (-1/a)^(n-j) y^(n-j) = sum_j C(n,j) PC_(n-j)^(k)(x:a) "
     "(-1/a)^j y^(j)",
     kDomainAK,
     "two-variable identity: both printed forms compared as polynomials in x at the first max(5, n+1) points of "
     "the fixed y enumeration 0, 1, -1, 2, 1/2, -2, 3, ...; agreement at n+1 points decides the degree-n "
     "identity in y",
     false, 0},
    {Id::E50, "E50", "Eq. (50)",
     "PC^_n^(k)(x+y:a) = sum_j C(n,j) PC^_j^(k)(x:a) a^-(n-j) (y)_(n-j) = sum_j C(n,j) PC^_(n-j)^(k)(x:a) "
     "a^-j (y)_j",
     kDomainAK, "two-variable identity: y sampled at the first max(5, n+1) enumeration points, as for E49", false,
     0},
    {Id::E51, "E51", "Eq. (51)", "PC_n^(k)(x-1:a) - PC_n^(k)(x:a) = a^-1 n PC_(n-1)^(k)(x:a)", kDomainAK1,
     "LHS shift applied as the operator e^(-t); RHS from the family table", false, 1},
    {Id::E52, "E52", "Eq. (52)",
     "PC^_n^(k)(x+1:a) - PC^_n^(k)(x:a) = a^-1 n PC^_(n-1)^(k)(x:a)  [printed with PC_n^(k)(x:a) as the "
     "second term on the left]",
     kDomainAK1,
     "checked with PC^ in both left-hand terms (the lowering relation for the second-kind pair); the printed "
     "mixed form is reported in as_printed",
     false, 1},
    {Id::E54, "E54", "Eq. (54)",
     "PC_(n+1)^(k)(x:a) = -1/a x PC_n^(k)(x+1:a) - PC_n^(k)(x:a) + a^-(n+1) sum_j { sum_m sum_l (-1)^(l+j) "
     "C(n,l) C(m,j) a^l / (m-j+2)^k S1(n-l,m) } (x+1)^j",
     kDomainAK1,
     "audit: printed form, and the derivation form obtained by applying the Sheffer recurrence "
     "s_(n+1) = (x - g'/g)(1/f') s_n to the first-kind pair",
     true, 1},
    {Id::E55, "E55", "Eq. (55)",
     "PC^_(n+1)^(k)(x:a) = 1/a x PC^_n^(k)(x-1:a) - PC^_n^(k)(x:a) - a^-(n+1) sum_j { sum_m sum_l "
     "(-1)^(l+m+j) C(n,l) C(m,j) a^l / (m-j+2)^k S1(n-l,m) } (x-1)^j",
     kDomainAK1,
     "audit: printed form, and the derivation form obtained by applying the Sheffer recurrence to the "
     "second-kind pair",
     true, 1},
    {Id::T6, "T6", "Theorem 6",
     "PC_n^(k)(x:a) = -PC_(n-1)^(k)(x:a) - 1/a x PC_(n-1)^(k)(x+1:a) + 1/n sum_(l<n) C(n,l) C^_l / a^l "
     "{ PC_(n-l)^(k-1)(x:a) - PC_(n-l)^(k)(x:a) }",
     kDomainAK1,
     "audit: printed form, and the derivation form in which the last term is read off the series "
     "e^(-t) d/dt[Lif_k(log(1+t/a))] (1+t/a)^(-x) directly",
     true, 1},
    {Id::E60, "E60", "Eq. (60)",
     "PC_n^(k)(x:a) = -PC_(n-1)^(k)(x:a) - 1/a x PC_(n-1)^(k)(x+1:a) + 1/n sum_(l<n) C(n,l) C_l / a^l "
     "{ PC_(n-l)^(k-1)(x+1:a) - PC_(n-l)^(k)(x+1:a) }",
     kDomainAK1, "audit: printed form, and the same series-assembled derivation form as T6", true, 1},
    {Id::E61, "E61", "Eq. (61)",
     "PC^_n^(k)(x:a) = -PC^_(n-1)^(k)(x:a) + 1/a x PC^_(n-1)^(k)(x-1:a) + 1/n sum_(l<n) C^_l / a^l C(n,l) "
     "{ PC^_(n-l)^(k-1)(x:a) - PC^_(n-l)^(k)(x:a) }",
     kDomainAK1,
     "audit: printed form, and the derivation form in which the last term is read off the series "
     "e^(-t) d/dt[Lif_k(-log(1+t/a))] (1+t/a)^x directly",
     true, 1},
    {Id::E62, "E62", "Eq. (62)",
     "PC^_n^(k)(x:a) = -PC^_(n-1)^(k)(x:a) + 1/a x PC^_(n-1)^(k)(x-1:a) + 1/n sum_(l<n) C(n,l) C_l / a^l "
     "{ PC^_(n-1)^(k-1)(x-1:a) - PC^_(n-l)^(k)(x-1:a) }",
     kDomainAK1, "audit: printed form, and the variant with index n-l in both bracketed terms", true, 1},
    {Id::T7, "T7", "Unnumbered theorem following Eq. (66)",
     "sum_(l<=n-m) C(n,l)/a^(n-l) S1(n-l,m) PC^_l^(k)(0:a) + sum_(l<=n-1-m) C(n-1,l)/a^(n-1-l) S1(n-1-l,m) "
     "PC^_l^(k)(0:a) = (1-1/m) sum_(l<=n-m) C(n-1,l)/a^(n-l) S1(n-1-l,m-1) PC^_l^(k)(-1:a) + 1/m "
     "sum_(l<=n-m) C(n-1,l)/a^(n-l) S1(n-1-l,m-1) PC^_l^(k)(-1:a)",
     kDomainM,
     "audit: printed form, and the authoritative form Eq. (63) = Eq. (66) (each a single rational), both also "
     "matched against the functional <e^(-t) Lif_k(-log(1+t/a)) log(1+t/a)^m | x^n> evaluated on the series",
     true, 1, false, false, true},
    {Id::E67, "E67", "Eq. (67)",
     "sum_(l<=n-m) C(n,l)/a^(n-l) S1(n-l,m) PC_l^(k)(0:a) + sum_(l<=n-1-m) C(n-1,l)/a^(n-l-1) S1(n-l-1,m) "
     "PC_l^(k)(0:a) = (1-1/m) sum_(l<=n-m) C(n-1,l)/a^(n-l) S1(n-1-l,m-1) PC_l^(k)(1:a) + 1/m sum_(l<=n-m) "
     "C(n-1,l)/a^(n-l) S1(n-1-l,m-1) PC_l^(k-1)(1:a)",
     kDomainM,
     "audit: printed form, and the analogue of Eq. (63) = Eq. (66) for the first kind, matched against the "
     "functional <e^(-t) Lif_k(log(1+t/a)) log(1+t/a)^m | x^n>",
     true, 1, false, false, true},
    {Id::E68, "E68", "Eq. (68)",
     "d/dx PC_n^(k)(x:a) = (-1)^n n! sum_(l<n) (-1)^l / ((n-l) l! a^(n-l)) PC_l^(k)(x:a)", kDomainAK1,
     "LHS is the formal x-derivative of the extracted polynomial", false, 1},
    {Id::E69, "E69", "Eq. (69)",
     "d/dx PC^_n^(k)(x:a) = (-1)^n n! sum_(l<n) (-1)^(l-1) / ((n-l) l! a^(n-l)) PC^_l^(k)(x:a)", kDomainAK1,
     "LHS is the formal x-derivative of the extracted polynomial", false, 1},
    {Id::T8, "T8", "Theorem 8",
     "PC_n^(k)(x:a) = sum_m { (-1)^m sum_l sum_(i<=l) C(n,l) C(l,i) / a^(n-l+i) S1(n-l,m) CC_i^(s) "
     "PC_(l-i)^(k)(s:a) } B_m^(s)(x)",
     kDomainS, "RHS from Cauchy numbers of order s, family values at x = s, and Bernoulli polynomials of order s",
     false, 0, true},
    {Id::E74, "E74", "Eq. (74)",
     "PC^_n^(k)(x:a) = sum_m { sum_l sum_(i<=l) C(n,l) C(l,i) / a^(n-l+i) S1(n-l,m) CC^_i^(s) "
     "PC^_(l-i)^(k)(s:a) } B_m^(s)(x)",
     kDomainS,
     "RHS from Cauchy numbers of the second kind of order s, family values at x = s, and Bernoulli "
     "polynomials of order s",
     false, 0, true},
    {Id::T9, "T9", "Theorem 9",
     "PC_n^(k)(x:a) = (1-lambda)^-s sum_m { (-1)^m sum_l sum_(i<=s) C(n,l) C(s,i) (l)_i / a^(n-l+i) "
     "(1-lambda)^(s-i) (-lambda)^i S1(n-l,m) PC_(l-i)^(k)(s:a) } H_m^(s)(x|lambda)  [printed with C(l,i) in "
     "place of C(s,i)]",
     kDomainSL,
     "checked with C(s,i), the coefficient produced by the binomial expansion of (1 - lambda - lambda t/a)^s in "
     "the connection constants; the printed C(l,i) form is reported in as_printed",
     false, 0, true, true},
    {Id::E77, "E77", "Eq. (77)",
     "PC^_n^(k)(x:a) = (1-lambda)^-s sum_m { sum_l sum_(i<=s) C(n,l) C(s,i) / a^(n-l) (-lambda)^(s-i) "
     "S1(n-l,m) PC^_l^(k)(i:a) } H_m^(s)(x|lambda)",
     kDomainSL, "RHS from family values at x = 0..s and Frobenius-Euler polynomials of order s", false, 0, true,
     true},
    {Id::T10, "T10", "Theorem 10", "PC_n^(k)(x:a) = sum_m C(n,m) / (-a)^m PC_(n-m)^(k)(0:a) x^(m)", kDomainAK,
     "RHS in the rising-factorial basis; the coefficients also equal the connection constants to (1, 1-e^(-t))",
     false, 0},
    {Id::T10H, "T10H", "Remark after Theorem 10", "PC^_n^(k)(x:a) = sum_m C(n,m) / a^m PC^_(n-m)^(k)(0:a) (x)_m",
     kDomainAK, "RHS in the falling-factorial basis", false, 0},
}};

}  // namespace

std::span<const IdentityInfo> catalogue() { return kCatalogue; }

const IdentityInfo& info(IdentityId id) { return kCatalogue[static_cast<std::size_t>(id)]; }

std::string_view to_string(IdentityId id) { return info(id).name; }

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (const auto& entry : kCatalogue)
    if (entry.name == name) return entry.id;
  return std::nullopt;
}

std::vector<IdentityId> core_identities() {
  std::vector<IdentityId> out;
  for (const auto& entry : kCatalogue)
    if (!entry.audit) out.push_back(entry.id);
  return out;
}

std::vector<IdentityId> audit_identities() {
  std::vector<IdentityId> out;
  for (const auto& entry : kCatalogue)
    if (entry.audit) out.push_back(entry.id);
  return out;
}

std::vector<IdentityId> all_identities() {
  std::vector<IdentityId> out;
  for (const auto& entry : kCatalogue) out.push_back(entry.id);
  return out;
}

std::vector<IdentityId> resolve_identities(std::string_view selector) {
  if (selector == "core") return core_identities();
  if (selector == "audit") return audit_identities();
  if (selector == "all") return all_identities();
  std::vector<IdentityId> out;
  std::size_t start = 0;
  while (start <= selector.size()) {
    const auto comma = std::min(selector.find(',', start), selector.size());
    const auto name = selector.substr(start, comma - start);
    if (name == "core" || name == "audit" || name == "all") {
      for (auto id : resolve_identities(name)) out.push_back(id);
    } else {
      const auto id = parse_identity(name);
      if (!id) throw UsageError("unknown identity '" + std::string(name) + "'");
      out.push_back(*id);
    }
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::strong_ordering operator<=>(const ParamPoint& lhs, const ParamPoint& rhs) {
  if (auto c = lhs.a <=> rhs.a; c != 0) return c;
  if (auto c = lhs.k <=> rhs.k; c != 0) return c;
  if (auto c = lhs.s <=> rhs.s; c != 0) return c;
  if (auto c = lhs.lambda <=> rhs.lambda; c != 0) return c;
  return lhs.m <=> rhs.m;
}

std::string to_string(const ParamPoint& params) {
  std::ostringstream os;
  os << "a=" << params.a << " k=" << params.k;
  if (params.s) os << " s=" << *params.s;
  if (params.lambda) os << " lambda=" << *params.lambda;
  if (params.m) os << " m=" << *params.m;
  return os.str();
}

bool VerificationResult::holds() const {
  if (info(id).audit) return equal || derivation_form.value_or(false);
  return equal;
}

}  // namespace umbra
