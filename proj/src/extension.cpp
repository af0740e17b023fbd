#include "ladder/extension.hpp"

#include "ladder/text.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <cstdlib>
#include <stdexcept>

namespace ladder {

CElement project_to_c(const LieElement& e) {
  if (e.has_y()) throw std::domain_error("project_to_c: element has a Y component");
  CElement out;
  for (const auto& [idx, c] : e.z) out.terms.add(idx.degree(), c);
  return out;
}

LieElement section_s(const CElement& c) {
  LieElement out;
  for (const auto& [d, coeff] : c.terms) {
    if (d > 0) out.z.add({static_cast<std::uint32_t>(d), 0}, coeff);
    else out.z.add({0, static_cast<std::uint32_t>(-d)}, coeff);
  }
  return out;
}

namespace {

// α(Z_d).E_{i,j}. For d > 0, s(Z_d) acts as the shift Σ_k E_{d+k,k}; for
// d < 0 as Σ_k E_{k,k-d}.
void add_alpha_generator(GlElement& out, std::int64_t d, EIndex idx, const Scalar& c) {
  if (d > 0) {
    const auto p = static_cast<std::uint32_t>(d);
    out.e.add({idx.i + p, idx.j}, c);
    if (idx.j >= p) out.e.add({idx.i, idx.j - p}, -c);
  } else if (d < 0) {
    const auto p = static_cast<std::uint32_t>(-d);
    if (idx.i >= p) out.e.add({idx.i - p, idx.j}, c);
    out.e.add({idx.i, idx.j + p}, -c);
  }
}

bool same_sign(std::int64_t a, std::int64_t b) { return (a >= 0 && b >= 0) || (a <= 0 && b <= 0); }

std::string c_name(std::int64_t d) { return "C[" + std::to_string(d) + "]"; }
std::string e_name(EIndex e) { return "E[" + std::to_string(e.i) + "," + std::to_string(e.j) + "]"; }

}  // namespace

GlElement alpha(const CElement& x, const GlElement& g) {
  GlElement out;
  for (const auto& [d, cx] : x.terms)
    for (const auto& [idx, cg] : g.e) add_alpha_generator(out, d, idx, cx * cg);
  return out;
}

GlElement rho_generators(std::int64_t a, std::int64_t b, const ExtensionRules& rules) {
  if (same_sign(a, b)) return {};
  if (a < 0) return -rho_generators(b, a, rules);
  // a = n > 0, b = -m < 0: ρ = [Z_{n,0}, Z_{0,m}] read in the E basis.
  const auto n = static_cast<std::uint32_t>(a);
  const auto m = static_cast<std::uint32_t>(-b);
  const std::uint32_t q = std::min(n, m);
  const bool perturbed = rules.perturb_rho && a == 1 && b == -2;
  GlElement out;
  for (std::uint32_t k = perturbed ? 1 : 0; k < q; ++k) out.e.add({n - q + k, m - q + k}, -1);
  return out;
}

GlElement rho(const CElement& x, const CElement& y, const ExtensionRules& rules) {
  GlElement out;
  for (const auto& [a, ca] : x.terms)
    for (const auto& [b, cb] : y.terms) out.e.add_scaled(rho_generators(a, b, rules).e, ca * cb);
  return out;
}

ExtElement ext_bracket(const ExtElement& a, const ExtElement& b, const ExtensionRules& rules) {
  ExtElement out;
  out.xi = bracket_ee(a.xi, b.xi) + alpha(a.x, b.xi) - alpha(b.x, a.xi) + rho(a.x, b.x, rules);
  return out;
}

ExtElement split_element(const LieElement& e) {
  CElement x = project_to_c(e);
  auto xi = express_in_e(e - section_s(x));
  if (!xi) throw std::logic_error("split_element: e - s(π(e)) is not in gl_+(∞)");
  return ExtElement{std::move(*xi), std::move(x)};
}

LieElement assemble(const ExtElement& v) { return embed_to_z(v.xi) + section_s(v.x); }

CheckOutcome verify_cocycle_conditions(std::uint32_t bound, const ExtensionRules& rules) {
  CheckOutcome out;
  const auto b = static_cast<std::int64_t>(bound);
  const auto units = e_window(bound);
  for (std::int64_t x = -b; x <= b; ++x)
    for (std::int64_t y = -b; y <= b; ++y) {
      const CElement cx = CElement::generator(x), cy = CElement::generator(y);
      const GlElement r = rho(cx, cy, rules);
      for (const auto& u : units) {
        ++out.cases;
        const GlElement xi = GlElement::unit(u.i, u.j);
        // [x,y]_C = 0, so the α([x,y]) term vanishes.
        GlElement lhs = alpha(cx, alpha(cy, xi)) - alpha(cy, alpha(cx, xi));
        GlElement rhs = bracket_ee(r, xi);
        if (lhs != rhs && out.passed) {
          out.passed = false;
          out.counterexample = "derivation condition at x=" + c_name(x) + ", y=" + c_name(y) +
                               ", xi=" + e_name(u) + ": " + to_text(lhs) + " != " + to_text(rhs);
        }
      }
    }
  for (std::int64_t x = -b; x <= b; ++x)
    for (std::int64_t y = -b; y <= b; ++y)
      for (std::int64_t z = -b; z <= b; ++z) {
        ++out.cases;
        const CElement cx = CElement::generator(x), cy = CElement::generator(y), cz = CElement::generator(z);
        GlElement sum = alpha(cx, rho(cy, cz, rules)) + alpha(cy, rho(cz, cx, rules)) + alpha(cz, rho(cx, cy, rules));
        if (!sum.is_zero() && out.passed) {
          out.passed = false;
          out.counterexample = "cyclic condition at x=" + c_name(x) + ", y=" + c_name(y) + ", z=" + c_name(z) +
                               ": sum = " + to_text(sum);
        }
      }
  return out;
}

CheckOutcome verify_alpha_agreement(std::uint32_t bound, const BracketRules& bracket_rules) {
  CheckOutcome out;
  const auto b = static_cast<std::int64_t>(bound);
  for (std::int64_t x = -b; x <= b; ++x)
    for (const auto& u : e_window(bound)) {
      ++out.cases;
      const CElement cx = CElement::generator(x);
      const GlElement g = GlElement::unit(u.i, u.j);
      auto direct = express_in_e(bracket(section_s(cx), embed_to_z(g), bracket_rules));
      GlElement formula = alpha(cx, g);
      if ((!direct || *direct != formula) && out.passed) {
        out.passed = false;
        out.counterexample = "alpha(" + c_name(x) + ", " + e_name(u) + ") = " + to_text(formula) +
                             " but [s(x), g] = " + (direct ? to_text(*direct) : std::string("<not in gl>"));
      }
    }
  return out;
}

CheckOutcome verify_reconstruction(std::uint32_t bound, const BracketRules& bracket_rules, const ExtensionRules& rules) {
  CheckOutcome out;
  const auto window = generator_window(bound);
  for (const auto& a : window)
    for (const auto& b : window) {
      ++out.cases;
      const LieElement za = LieElement::generator(a.n, a.m), zb = LieElement::generator(b.n, b.m);
      LieElement rebuilt = assemble(ext_bracket(split_element(za), split_element(zb), rules));
      LieElement direct = bracket(za, zb, bracket_rules);
      if (rebuilt != direct && out.passed) {
        out.passed = false;
        out.counterexample = "[" + to_text(za) + ", " + to_text(zb) + "]: extension data give " + to_text(rebuilt) +
                             ", bracket gives " + to_text(direct);
      }
    }
  return out;
}

LieElement nonsplit_obstruction(const GlElement& b_plus, const GlElement& b_minus, const BracketRules& rules) {
  for (const auto& [idx, c] : b_plus.e)
    if (idx.degree() != 1) throw std::invalid_argument("nonsplit_obstruction: b_plus must be supported on E[h+1,h]");
  for (const auto& [idx, c] : b_minus.e)
    if (idx.degree() != -1) throw std::invalid_argument("nonsplit_obstruction: b_minus must be supported on E[k,k+1]");
  LieElement lifted_plus = LieElement::generator(1, 0) + embed_to_z(b_plus);
  LieElement lifted_minus = LieElement::generator(0, 1) + embed_to_z(b_minus);
  return bracket(lifted_plus, lifted_minus, rules);
}

InfeasibilitySystem nonsplit_system(std::uint32_t top) {
  InfeasibilitySystem sys{ExactMatrix(top + 2, top + 1), std::vector<Scalar>(top + 2)};
  for (std::uint32_t j = 0; j <= top; ++j) {
    sys.matrix.add(j, j, -1);
    sys.matrix.add(j + 1, j, 1);
  }
  sys.rhs[0] = 1;
  return sys;
}

std::optional<Infeasibility> nonsplit_infeasibility(std::uint32_t top) {
  auto sys = nonsplit_system(top);
  auto result = solve_or_refute(sys.matrix, sys.rhs);
  if (auto* cert = std::get_if<Infeasibility>(&result)) return *cert;
  return std::nullopt;
}

ObstructionGridResult obstruction_grid(std::uint32_t support_bound, int coeff_bound, const BracketRules& rules) {
  // The obstruction is bilinear in (b_plus, b_minus):
  //   [Z10 + Σ a_h E+_h, Z01 + Σ b_k E-_k]
  //     = [Z10,Z01] + Σ a_h [E+_h, Z01] + Σ b_k [Z10, E-_k] + Σ a_h b_k [E+_h, E-_k].
  // The pieces are exact brackets with integer coefficients; each grid point
  // is then a small integer combination.
  const std::uint32_t width = support_bound + 1;
  const LieElement z10 = LieElement::generator(1, 0), z01 = LieElement::generator(0, 1);
  std::vector<LieElement> up(width), down(width);
  for (std::uint32_t h = 0; h < width; ++h) {
    up[h] = embed_to_z(GlElement::unit(h + 1, h));
    down[h] = embed_to_z(GlElement::unit(h, h + 1));
  }
  std::vector<LieElement> pieces;
  pieces.push_back(bracket(z10, z01, rules));
  for (std::uint32_t h = 0; h < width; ++h) pieces.push_back(bracket(up[h], z01, rules));
  for (std::uint32_t k = 0; k < width; ++k) pieces.push_back(bracket(z10, down[k], rules));
  for (std::uint32_t h = 0; h < width; ++h)
    for (std::uint32_t k = 0; k < width; ++k) pieces.push_back(bracket(up[h], down[k], rules));

  std::map<ZIndex, std::size_t> slot;
  for (const auto& p : pieces)
    for (const auto& [idx, c] : p.z) slot.emplace(idx, slot.size());
  std::vector<std::vector<std::int64_t>> dense(pieces.size(), std::vector<std::int64_t>(slot.size(), 0));
  for (std::size_t p = 0; p < pieces.size(); ++p)
    for (const auto& [idx, c] : pieces[p].z) {
      if (!is_integer(c)) throw std::logic_error("obstruction_grid: non-integral bracket coefficient");
      dense[p][slot[idx]] = c.get_num().get_si();
    }

  ObstructionGridResult result;
  const std::size_t vars = 2 * width;
  std::vector<int> coeff(vars, -coeff_bound);
  std::vector<std::int64_t> acc(slot.size());
  while (true) {
    ++result.cases;
    acc = dense[0];
    for (std::uint32_t h = 0; h < width; ++h)
      if (coeff[h] != 0)
        for (std::size_t s = 0; s < acc.size(); ++s) acc[s] += coeff[h] * dense[1 + h][s];
    for (std::uint32_t k = 0; k < width; ++k)
      if (coeff[width + k] != 0)
        for (std::size_t s = 0; s < acc.size(); ++s) acc[s] += coeff[width + k] * dense[1 + width + k][s];
    for (std::uint32_t h = 0; h < width; ++h)
      for (std::uint32_t k = 0; k < width; ++k) {
        const std::int64_t f = static_cast<std::int64_t>(coeff[h]) * coeff[width + k];
        if (f == 0) continue;
        const auto& piece = dense[1 + 2 * width + h * width + k];
        for (std::size_t s = 0; s < acc.size(); ++s) acc[s] += f * piece[s];
      }
    bool vanishes = std::all_of(acc.begin(), acc.end(), [](std::int64_t v) { return v == 0; });
    if (vanishes) {
      if (result.vanishing++ == 0) {
        std::string desc = "a=(";
        for (std::uint32_t h = 0; h < width; ++h) desc += (h ? "," : "") + std::to_string(coeff[h]);
        desc += ") b=(";
        for (std::uint32_t k = 0; k < width; ++k) desc += (k ? "," : "") + std::to_string(coeff[width + k]);
        result.first_vanishing = desc + ")";
      }
    }
    std::size_t pos = 0;
    while (pos < vars && coeff[pos] == coeff_bound) coeff[pos++] = -coeff_bound;
    if (pos == vars) break;
    ++coeff[pos];
  }
  return result;
}

}  // namespace ladder
