//! Standard bases for local degree orders (Mora's tangent cone algorithm).
//!
//! Reduction picks, among all reducers whose leading monomial divides the
//! current leading monomial, one of minimal écart, and remembers the current
//! polynomial as a future reducer whenever the chosen one has larger écart.

use super::groebner::spoly;
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::polynomial::Polynomial;

/// `deg f - deg lm(f)`.
fn ecart(f: &Polynomial) -> u32 {
    f.degree() - f.lm().degree()
}

/// Mora's weak normal form: the leading monomial of the result is not
/// divisible by any leading monomial of `basis` (or the result is zero).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let f = f.clone().sorted(order);
    let basis: Vec<Polynomial> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.clone().sorted(order))
        .collect();
    weak_normal_form(f, &basis, order)
}

fn weak_normal_form(mut h: Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let mut extra: Vec<Polynomial> = Vec::new();
    while !h.is_zero() {
        let lm = *h.lm();
        let best = basis
            .iter()
            .chain(extra.iter())
            .filter(|g| g.lm().divides(&lm))
            .min_by_key(|g| ecart(g))
            .cloned();
        let Some(g) = best else { break };
        if ecart(&g) > ecart(&h) {
            extra.push(h.clone());
        }
        let q = lm.div(g.lm()).unwrap();
        let c = h.lc() / g.lc();
        h = h.merge(&g, &-&c, &q, order);
    }
    h
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// A minimal standard basis of the ideal generated by `gens` with respect to
/// the local order `order` (normally [`MonomialOrder::neg_deg_revlex`]).
///
/// Leading monomials are the lowest-degree terms, so the lowest-degree forms
/// of the result generate the ideal of initial forms.
pub fn standard_basis(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.clone().sorted(order).monic())
        .collect();
    if basis.iter().any(|g| g.lm().is_one()) {
        return vec![Polynomial::monomial(Monomial::one())];
    }
    let mut pairs: Vec<Pair> = Vec::new();
    for j in 0..basis.len() {
        add_pairs(&basis, &mut pairs, j);
    }
    while !pairs.is_empty() {
        let (k, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then_with(|| order.cmp(&b.lcm, &a.lcm))
            })
            .unwrap();
        let pair = pairs.swap_remove(k);
        let s = spoly(&basis[pair.i], &basis[pair.j], order);
        let h = weak_normal_form(s, &basis, order);
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        if h.lm().is_one() {
            return vec![Polynomial::monomial(Monomial::one())];
        }
        basis.push(h);
        add_pairs(&basis, &mut pairs, basis.len() - 1);
    }
    minimalize(basis, order)
}

fn add_pairs(basis: &[Polynomial], pairs: &mut Vec<Pair>, h: usize) {
    let lh = *basis[h].lm();
    pairs.retain(|p| {
        !(lh.divides(&p.lcm)
            && lh.lcm(basis[p.i].lm()) != p.lcm
            && lh.lcm(basis[p.j].lm()) != p.lcm)
    });
    let new: Vec<(usize, Monomial)> = (0..h).map(|g| (g, lh.lcm(basis[g].lm()))).collect();
    for (k, (g, l)) in new.iter().enumerate() {
        let dominated = new
            .iter()
            .enumerate()
            .any(|(k2, (_, l2))| k2 != k && l2.divides(l) && (l2 != l || k2 < k));
        if dominated || lh.is_coprime(basis[*g].lm()) {
            continue;
        }
        pairs.push(Pair {
            i: *g,
            j: h,
            lcm: *l,
        });
    }
}

fn minimalize(basis: Vec<Polynomial>, order: &MonomialOrder) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(j, f)| j != k && f.lm().divides(g.lm()) && (f.lm() != g.lm() || j < k));
        if !redundant {
            out.push(g.clone());
        }
    }
    out.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn unit_times_variable() {
        let o = MonomialOrder::neg_deg_revlex(1);
        let sb = standard_basis(&[p("x1 - x1^2")], &o);
        assert_eq!(sb.len(), 1);
        assert_eq!(sb[0].lowest_form(), p("x1"));
    }

    #[test]
    fn cusp_tangent_cone() {
        // (x2^2 - x1^3): tangent cone x2^2
        let o = MonomialOrder::neg_deg_revlex(2);
        let sb = standard_basis(&[p("x1^3 - x2^2")], &o);
        let forms: Vec<_> = sb.iter().map(|g| g.lowest_form().monic()).collect();
        assert_eq!(forms, vec![p("x2^2")]);
    }

    #[test]
    fn initial_forms_need_new_elements() {
        // I = (x1^2 + x2^3, x1*x2): x2^4 = x2*(x1^2 + x2^3)/... lies in I*
        let o = MonomialOrder::neg_deg_revlex(2);
        let sb = standard_basis(&[p("x1^2 + x2^3"), p("x1*x2")], &o);
        let lms: Vec<String> = sb.iter().map(|g| g.lm().to_string()).collect();
        assert!(lms.contains(&"x2^4".to_string()), "{lms:?}");
        let nf = normal_form(&p("x2^4"), &sb, &o);
        assert!(nf.is_zero() || !sb.iter().any(|g| g.lm().divides(nf.lm())));
    }
}
