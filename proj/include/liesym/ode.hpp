#pragma once

#include <vector>

#include "liesym/ratfunc.hpp"

namespace liesym {

// Polynomial vector field: one coefficient polynomial per variable of an
// ordered variable set.  Houses D_x (as N=1 case), D = N*D_x and the extended
// operator on (x, y, z, s).
class Derivation {
  public:
    Derivation(std::vector<Var> vars, std::vector<MultiPoly> coeffs)
        : vars_(std::move(vars)), coeffs_(std::move(coeffs)) {}

    const std::vector<Var>& vars() const { return vars_; }
    const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

    const MultiPoly& coeff(Var v) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == v) return coeffs_[i];
        throw unknown_variable(var_name(v));
    }

    int max_coeff_degree() const {
        int d = 0;
        for (const auto& c : coeffs_) d = std::max(d, c.total_degree());
        return d;
    }

    MultiPoly apply(const MultiPoly& p) const {
        MultiPoly r;
        for (size_t i = 0; i < vars_.size(); ++i) r += coeffs_[i] * p.diff(vars_[i]);
        return r;
    }

    RationalFunction apply(const RationalFunction& f) const {
        RationalFunction r;
        for (size_t i = 0; i < vars_.size(); ++i)
            r += RationalFunction(coeffs_[i]) * f.diff(vars_[i]);
        return r;
    }

  private:
    std::vector<Var> vars_;
    std::vector<MultiPoly> coeffs_;
};

// A rational 2ODE y'' = phi = M/N with gcd(M, N) = 1 and N monic under
// graded-lex.  z stands for y' throughout.
class Rational2ODE {
  public:
    Rational2ODE() : phi_(RationalFunction()) {}

    static Rational2ODE from_phi(const RationalFunction& phi) {
        Rational2ODE ode;
        ode.phi_ = phi;
        return ode;
    }

    const RationalFunction& phi() const { return phi_; }
    const MultiPoly& M() const { return phi_.num(); }
    const MultiPoly& N() const { return phi_.den(); }

    RationalFunction phi_y() const { return phi_.diff(Var::y); }
    RationalFunction phi_z() const { return phi_.diff(Var::z); }

  private:
    RationalFunction phi_;
};

// Cancels common factors and makes N monic (the sign/scale normalization all
// golden comparisons rely on).
inline Rational2ODE build_ode(const MultiPoly& M_raw, const MultiPoly& N_raw) {
    if (N_raw.is_zero()) throw zero_denominator();
    if (M_raw.uses(Var::s) || N_raw.uses(Var::s)) throw unknown_variable("s");
    return Rational2ODE::from_phi(rat_normalize(M_raw, N_raw));
}

// D_x = d/dx on the jet space: del_x + z del_y + phi del_z.
inline RationalFunction apply_Dx(const Rational2ODE& ode, const RationalFunction& f) {
    if (f.uses(Var::s)) throw unknown_variable("s");
    return f.diff(Var::x) + RationalFunction::variable(Var::z) * f.diff(Var::y) +
           ode.phi() * f.diff(Var::z);
}

// D = N * D_x: the polynomial derivation (N, N z, M) on (x, y, z).
inline Derivation build_D(const Rational2ODE& ode) {
    const MultiPoly& N = ode.N();
    const MultiPoly& M = ode.M();
    return Derivation({Var::x, Var::y, Var::z},
                      {N, N * MultiPoly::variable(Var::z), M});
}

// s-coefficient of the extended operator: N^2 s^2 + Gamma1 s + Gamma0 with
// Gamma1 = N M_z - M N_z and Gamma0 = M N_y - N M_y.  The constant term's
// sign matches the worked operators and the Riccati equation; N^2 times
// (s^2 + phi_z s - phi_y) expands to exactly this polynomial.
inline MultiPoly script_d_s_coeff(const Rational2ODE& ode) {
    const MultiPoly& N = ode.N();
    const MultiPoly& M = ode.M();
    MultiPoly gamma1 = N * M.diff(Var::z) - M * N.diff(Var::z);
    MultiPoly gamma0 = M * N.diff(Var::y) - N * M.diff(Var::y);
    MultiPoly s = MultiPoly::variable(Var::s);
    return N * N * s * s + gamma1 * s + gamma0;
}

// The operator whose eigenpolynomials linear in s carry the rational
// S-functions: (N^2, N^2 z, N M, N^2 s^2 + Gamma1 s + Gamma0) on (x, y, z, s).
inline Derivation build_scriptD(const Rational2ODE& ode) {
    const MultiPoly& N = ode.N();
    const MultiPoly& M = ode.M();
    return Derivation({Var::x, Var::y, Var::z, Var::s},
                      {N * N, N * N * MultiPoly::variable(Var::z), N * M,
                       script_d_s_coeff(ode)});
}

enum class AuxKind { A1, A2, A3 };

// First-order ODE obtained by freezing one jet variable.  The rhs is stored
// over (x, y, z) with the frozen variable's slot read as the parameter:
//   A1  dv/du = rhs(a1, u, v)   (x = a1, y = u, z = v)
//   A2  dv/dt = rhs(t, a2, v)   (y = a2)
//   A3  du/dt = rhs(t, u, a3)   (z = a3)
struct Auxiliary1ODE {
    AuxKind kind;
    Var fixed_variable;
    std::string parameter;
    RationalFunction rhs;
};

struct AuxiliaryTriple {
    Auxiliary1ODE a1, a2, a3;
};

inline AuxiliaryTriple auxiliary_odes(const Rational2ODE& ode, const RationalFunction& S) {
    if (S.uses(Var::s)) throw unknown_variable("s");
    RationalFunction z = RationalFunction::variable(Var::z);
    Auxiliary1ODE a1{AuxKind::A1, Var::x, "a1", -S};
    Auxiliary1ODE a2{AuxKind::A2, Var::y, "a2", ode.phi() + z * S};
    if (S.is_zero()) {
        // A3 divides by S; constructing it is the caller's error.
        return AuxiliaryTriple{a1, a2, Auxiliary1ODE{AuxKind::A3, Var::z, "a3",
                                                     RationalFunction()}};
    }
    Auxiliary1ODE a3{AuxKind::A3, Var::z, "a3", (ode.phi() + z * S) / S};
    return AuxiliaryTriple{a1, a2, a3};
}

inline Auxiliary1ODE auxiliary_ode_a3(const Rational2ODE& ode, const RationalFunction& S) {
    if (S.is_zero()) throw zero_s_function();
    RationalFunction z = RationalFunction::variable(Var::z);
    return Auxiliary1ODE{AuxKind::A3, Var::z, "a3", (ode.phi() + z * S) / S};
}

// eta_bar = eta - z * xi for point infinitesimals xi(x, y), eta(x, y).
inline RationalFunction evolutionary_form(const RationalFunction& xi,
                                          const RationalFunction& eta) {
    if (xi.uses(Var::z) || xi.uses(Var::s) || eta.uses(Var::z) || eta.uses(Var::s))
        throw error("point infinitesimals must depend on (x, y) only");
    return eta - RationalFunction::variable(Var::z) * xi;
}

}  // namespace liesym
