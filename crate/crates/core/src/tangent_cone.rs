//! The toric ideal of a numerical semigroup, its ideal of initial forms
//! (the defining ideal of the tangent cone) and the invariants read off it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::hilbert::{numerator_of_monomials, reduce_numerator};
use crate::poly::{Ideal, Monomial, MonomialOrder, OrderKind, Polynomial, Rational};
use crate::semigroup::{CmCertificate, NumericalSemigroup};

/// `I_H`: the kernel of `x_i -> t^{a_i}`, by eliminating `t` from
/// `(x_i - t^{a_i})`. Returned by minimal binomial generators.
pub fn toric_ideal(h: &NumericalSemigroup) -> Ideal {
    let n = h.embdim();
    assert!(n < crate::poly::MAX_VARS, "embedding dimension too large");
    let order = MonomialOrder::elimination(1, n + 1);
    let gens: Vec<Polynomial> = h
        .generators()
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            Polynomial::binomial(Monomial::var(i + 1), Monomial::var_pow(0, a as u32), &order)
        })
        .collect();
    let lifted = Ideal::new(gens, n + 1);
    let eliminated = lifted.eliminate(1);
    let o = MonomialOrder::grevlex(n + 1);
    let shifted: Vec<Polynomial> = eliminated
        .gens()
        .iter()
        .map(|g| g.shift_down(1, &o))
        .collect();
    let ideal = Ideal::new(shifted, n);
    Ideal::new(
        canonical(ideal.minimal_generators_graded(h.generators())),
        n,
    )
}

/// Sort for display: by degree, then by leading monomial (grevlex,
/// largest first).
fn canonical(mut gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let n = gens
        .iter()
        .map(|g| g.nvars_used())
        .max()
        .unwrap_or(1)
        .max(1);
    let o = MonomialOrder::grevlex(n);
    for g in gens.iter_mut() {
        g.resort(&o);
        g.make_monic();
    }
    gens.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| o.cmp(b.lm(), a.lm()))
    });
    gens
}

/// `I*`, generated by the lowest-degree forms of the elements of `ideal`.
///
/// Computed from a standard basis in the local degree reverse lex order;
/// returned by minimal homogeneous generators.
pub fn initial_forms_ideal(ideal: &Ideal) -> Ideal {
    let n = ideal.nvars();
    let sb = ideal.basis(&MonomialOrder::neg_deg_revlex(n));
    let forms: Vec<Polynomial> = sb.iter().map(|g| g.lowest_form()).collect();
    let istar = Ideal::new(forms, n);
    Ideal::new(canonical(istar.minimal_generators()), n)
}

/// `I*` by a second route: with `f_t = t^{-ord f} f(t x)`, the ideal
/// `(f_t) : t^∞` specializes to `I*` at `t = 0`.
pub fn initial_forms_by_saturation(ideal: &Ideal) -> Ideal {
    let n = ideal.nvars();
    let t = n;
    let order = MonomialOrder::grevlex(n + 1);
    let gens: Vec<Polynomial> = ideal
        .gens()
        .iter()
        .map(|f| {
            let low = f.low_degree();
            let terms = f
                .terms()
                .iter()
                .map(|(m, c)| (m.mul(&Monomial::var_pow(t, m.degree() - low)), c.clone()))
                .collect();
            Polynomial::from_terms(terms, &order)
        })
        .collect();
    let family = Ideal::new(gens, n + 1);
    let sat = family.saturate(&Polynomial::var(t));
    let special: Vec<Polynomial> = sat.gens().iter().map(|g| g.set_var_zero(t)).collect();
    let istar = Ideal::new(special, n);
    Ideal::new(canonical(istar.minimal_generators()), n)
}

/// Every minimal generator has degree two.
pub fn is_quadratic(istar: &Ideal) -> bool {
    !istar.is_zero()
        && istar
            .gens()
            .iter()
            .all(|g| g.degree() == 2 && g.is_homogeneous())
}

/// h-polynomial and Krull dimension of `S/I` for a homogeneous ideal, from
/// the Hilbert series of a grevlex initial ideal.
pub fn hilbert_data(ideal: &Ideal) -> (Vec<i64>, usize) {
    let lms = ideal.leading_monomials(&ideal.grevlex());
    let num = numerator_of_monomials(&lms);
    reduce_numerator(&num, ideal.nvars())
}

/// The h-vector of the tangent cone, computed from `I*` and checked
/// against the arithmetic route through the order function.
pub fn h_vector(h: &NumericalSemigroup, istar: &Ideal) -> Result<Vec<i64>> {
    let (from_ideal, dim) = hilbert_data(istar);
    let from_arith = h.h_vector_arithmetic();
    if dim != 1 || from_ideal != from_arith {
        return Err(Error::OracleMismatch {
            what: format!("h-vector of {h}"),
            left: format!("{from_ideal:?} (dim {dim})"),
            right: format!("{from_arith:?}"),
        });
    }
    Ok(from_ideal)
}

/// `I* : x1 = I*`, i.e. `x1` is a non-zerodivisor on the tangent cone.
pub fn is_cm_ideal(istar: &Ideal) -> bool {
    let colon = istar.colon(&Polynomial::var(0));
    colon.same_ideal(istar)
}

/// A graded reverse lex order in which the reduced Gröbner basis is
/// quadratic, together with that basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticGb {
    /// Variable priority, largest first, e.g. `x2>x3>x4>x5>x1`.
    pub order: String,
    pub basis: Vec<String>,
}

fn priority_label(p: &[usize]) -> String {
    p.iter()
        .map(|v| format!("x{}", v + 1))
        .collect::<Vec<_>>()
        .join(">")
}

/// The revlex orders tried: `x1 > ... > xn`, then `x2 > ... > xn > x1`.
pub fn revlex_candidates(n: usize) -> Vec<Vec<usize>> {
    let natural: Vec<usize> = (0..n).collect();
    let mut rotated: Vec<usize> = (1..n).collect();
    rotated.push(0);
    vec![natural, rotated]
}

/// Tries the standard revlex candidates on a quadratic `I*`.
pub fn has_quadratic_gb_revlex(istar: &Ideal) -> Result<Option<QuadraticGb>> {
    if !is_quadratic(istar) {
        return Err(Error::NotQuadratic);
    }
    Ok(revlex_candidates(istar.nvars())
        .into_iter()
        .find_map(|p| quadratic_gb_in(istar, &p)))
}

/// The reduced Gröbner basis for grevlex with priority `p`, if quadratic.
pub fn quadratic_gb_in(istar: &Ideal, p: &[usize]) -> Option<QuadraticGb> {
    let order = MonomialOrder::with_priority(OrderKind::GrevLex, p);
    let gb = istar.basis(&order);
    gb.iter().all(|g| g.degree() == 2).then(|| QuadraticGb {
        order: priority_label(p),
        basis: gb.iter().map(|g| g.to_string()).collect(),
    })
}

/// `I*` modulo the regular element `x1`: the ambient ring keeps all `n`
/// variables, `x1` no longer occurs, and `active` lists the rest.
#[derive(Clone, Debug)]
pub struct ArtinianReduction {
    pub ideal: Ideal,
    pub active: Vec<usize>,
}

impl ArtinianReduction {
    /// h-polynomial of `K[active]/J`.
    pub fn h_polynomial(&self) -> Vec<i64> {
        let with_x1 = self.ideal.with_generator(Polynomial::var(0));
        hilbert_data(&with_x1).0
    }
}

pub fn artinian_reduction(istar: &Ideal) -> Result<ArtinianReduction> {
    if !is_quadratic(istar) {
        return Err(Error::NotQuadratic);
    }
    if !is_cm_ideal(istar) {
        return Err(Error::NotRegular);
    }
    let n = istar.nvars();
    let reduced = istar.set_var_zero(0);
    let ideal = Ideal::new(canonical(reduced.minimal_generators()), n);
    Ok(ArtinianReduction {
        ideal,
        active: (1..n).collect(),
    })
}

/// Everything computed about the tangent cone of one semigroup.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TangentConeAnalysis {
    pub generators: Vec<u64>,
    pub toric_ideal: Vec<String>,
    pub initial_forms: Vec<String>,
    pub is_quadratic: bool,
    pub h_vector: Vec<i64>,
    pub is_cm: bool,
    pub cm_certificate: CmCertificate,
    pub qgb_revlex: Option<QuadraticGb>,
}

impl TangentConeAnalysis {
    pub fn compute(h: &NumericalSemigroup) -> Result<Self> {
        Self::compute_with_ideal(h).map(|(a, _)| a)
    }

    /// Also returns `I*` for further work.
    pub fn compute_with_ideal(h: &NumericalSemigroup) -> Result<(Self, Ideal)> {
        let toric = toric_ideal(h);
        let istar = initial_forms_ideal(&toric);
        let hv = h_vector(h, &istar)?;
        let cert = h.is_cm_tangent_cone();
        let is_cm = is_cm_ideal(&istar);
        if is_cm != cert.is_cm() {
            return Err(Error::OracleMismatch {
                what: format!("Cohen–Macaulayness of the tangent cone of {h}"),
                left: format!("I*:x1 = I* is {is_cm}"),
                right: cert.to_string(),
            });
        }
        let quadratic = is_quadratic(&istar);
        let qgb = if quadratic {
            has_quadratic_gb_revlex(&istar)?
        } else {
            None
        };
        let analysis = TangentConeAnalysis {
            generators: h.generators().to_vec(),
            toric_ideal: toric.gens().iter().map(|g| g.to_string()).collect(),
            initial_forms: istar.gens().iter().map(|g| g.to_string()).collect(),
            is_quadratic: quadratic,
            h_vector: hv,
            is_cm,
            cm_certificate: cert,
            qgb_revlex: qgb,
        };
        Ok((analysis, istar))
    }
}

/// `x^u - x^v` with unit coefficients, for building expected ideals.
pub fn monic_binomial(u: &[u32], v: &[u32]) -> Polynomial {
    let n = u.len().max(v.len());
    let o = MonomialOrder::grevlex(n);
    Polynomial::from_terms(
        vec![
            (Monomial::from_exponents(u), Rational::ONE),
            (Monomial::from_exponents(v), -Rational::ONE),
        ],
        &o,
    )
}
