#include "braidthom/subgroups.hpp"

#include <string>

#include "braidthom/errors.hpp"
#include "braidthom/named.hpp"

namespace braidthom {

std::string_view name(Subgroup s) {
  switch (s) {
    case Subgroup::F: return "F";
    case Subgroup::bV: return "bV";
    case Subgroup::bF: return "bF";
    case Subgroup::bP: return "bP";
    case Subgroup::bT: return "bT";
    case Subgroup::bVhat: return "bVhat";
    case Subgroup::bVhat1: return "bVhat1";
    case Subgroup::Dhat: return "Dhat";
  }
  return "?";
}

std::optional<Subgroup> parse_subgroup(std::string_view text) {
  for (Subgroup s : kAllSubgroups) {
    if (name(s) == text) return s;
  }
  return std::nullopt;
}

bool member(const Element& g, Subgroup s) {
  if (!g.rb.untwisted()) return false;
  switch (s) {
    case Subgroup::bV:
      return true;
    case Subgroup::F:
      return braid_equal(g.braid(), BraidWord(g.strands()));
    case Subgroup::bF:
      return is_pure(g.braid());
    case Subgroup::bP:
      return v_is_identity(project_to_v(g));
    case Subgroup::bT:
      return rho(g.braid()).is_rotation();
    case Subgroup::bVhat:
      return is_hat(g.braid());
    case Subgroup::bVhat1: {
      if (!is_hat(g.braid())) return false;
      const Element n = normalize(g);
      return n.left.right_depth() <= 1 && n.right.right_depth() <= 1;
    }
    case Subgroup::Dhat:
      return is_hat(g.braid()) && chi1(g) == 0;
  }
  return false;
}

std::int64_t chi1(const Element& g) {
  if (!member(g, Subgroup::bVhat)) throw DomainError("chi1: not in bVhat");
  return g.left.right_depth() - g.right.right_depth();
}

std::int64_t chi0(const Element& h) {
  const Element psi = named("psi");
  const Element c = mul(mul(psi, h), inv(psi));
  if (!member(c, Subgroup::bVhat)) throw DomainError("chi0: not in psi^-1 bVhat psi");
  return chi1(c);
}

Element embed_hat1(const Element& g) {
  if (!g.rb.untwisted()) throw DomainError("embed_hat1: not in bV");
  const Element n = normalize(g);
  return normalize(Element(Tree::join(n.left, Tree()),
                           RibbonBraid(n.braid().with_strands(n.strands() + 1)),
                           Tree::join(n.right, Tree())));
}

}  // namespace braidthom
