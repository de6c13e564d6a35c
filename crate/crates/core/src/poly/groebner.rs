//! Division, S-polynomials and Buchberger's algorithm for global orders.

use super::monomial::Monomial;
use super::mora;
use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use super::rational::Rational;

/// S-polynomial of `f` and `g`; both must be sorted under `order`.
pub fn spoly(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    if f.is_zero() || g.is_zero() {
        return Polynomial::zero();
    }
    let l = f.lm().lcm(g.lm());
    let mf = l.div(f.lm()).unwrap();
    let mg = l.div(g.lm()).unwrap();
    let left = f.mul_term(&mf, &g.lc().clone());
    left.merge(g, &-f.lc(), &mg, order)
}

/// Remainder of `f` on division by `basis`.
///
/// For a global order this is the full division algorithm: no term of the
/// result is divisible by a leading monomial of `basis`. For a local order
/// it is Mora's weak normal form (only the leading term is irreducible).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    if !order.is_global() {
        return mora::normal_form(f, basis, order);
    }
    let f = f.clone().sorted(order);
    let basis: Vec<Polynomial> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.clone().sorted(order))
        .collect();
    let refs: Vec<&Polynomial> = basis.iter().collect();
    reduce_full(f, &refs, order)
}

fn find_divisor<'a>(m: &Monomial, basis: &[&'a Polynomial]) -> Option<&'a Polynomial> {
    basis.iter().copied().find(|g| g.lm().divides(m))
}

/// Full reduction; `f` and every basis element sorted under `order`.
pub(crate) fn reduce_full(
    mut f: Polynomial,
    basis: &[&Polynomial],
    order: &MonomialOrder,
) -> Polynomial {
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    while !f.is_zero() {
        let lm = *f.lm();
        match find_divisor(&lm, basis) {
            Some(g) => {
                let q = lm.div(g.lm()).unwrap();
                let c = f.lc() / g.lc();
                f = f.merge(g, &-&c, &q, order);
            }
            None => {
                let mut terms = f.into_terms();
                let lead = terms.remove(0);
                rem.push(lead);
                f = Polynomial::from_sorted_unchecked(terms);
            }
        }
    }
    Polynomial::from_sorted_unchecked(rem)
}

/// Reduces only until the leading term is irreducible.
fn reduce_head(mut f: Polynomial, basis: &[&Polynomial], order: &MonomialOrder) -> Polynomial {
    while !f.is_zero() {
        let lm = *f.lm();
        match find_divisor(&lm, basis) {
            Some(g) => {
                let q = lm.div(g.lm()).unwrap();
                let c = f.lc() / g.lc();
                f = f.merge(g, &-&c, &q, order);
            }
            None => break,
        }
    }
    f
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Entry {
    poly: Polynomial,
    sugar: u32,
    active: bool,
}

/// Gebauer–Möller update with the new basis element `h`.
fn update(entries: &mut [Entry], pairs: &mut Vec<Pair>, h: usize) {
    let lh = *entries[h].poly.lm();
    let candidates: Vec<(usize, Monomial)> = (0..h)
        .filter(|&g| entries[g].active)
        .map(|g| (g, lh.lcm(entries[g].poly.lm())))
        .collect();

    // Chain criterion among the new pairs: keep (h, g) only if no other new
    // pair has an lcm properly dividing its lcm (or equal, earlier one wins).
    let mut kept: Vec<(usize, Monomial)> = Vec::new();
    for (k, (g, l)) in candidates.iter().enumerate() {
        let coprime = lh.is_coprime(entries[*g].poly.lm());
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(k2, (_, l2))| k2 != k && l2.divides(l) && (l2 != l || k2 < k));
        if coprime || !dominated {
            kept.push((*g, *l));
        }
    }
    // Product criterion: coprime leading monomials need no pair.
    kept.retain(|(g, _)| !lh.is_coprime(entries[*g].poly.lm()));

    // Old pairs made redundant by h.
    pairs.retain(|p| {
        !(lh.divides(&p.lcm)
            && lh.lcm(entries[p.i].poly.lm()) != p.lcm
            && lh.lcm(entries[p.j].poly.lm()) != p.lcm)
    });

    for (g, l) in kept {
        let sg = &entries[g];
        let sh = &entries[h];
        let sugar = (sg.sugar.saturating_sub(sg.poly.lm().degree()))
            .max(sh.sugar.saturating_sub(lh.degree()))
            + l.degree();
        pairs.push(Pair {
            i: g,
            j: h,
            lcm: l,
            sugar,
        });
    }

    for e in entries[..h].iter_mut() {
        if e.active && lh.divides(e.poly.lm()) {
            e.active = false;
        }
    }
}

/// The unique reduced (monic) Gröbner basis of the ideal generated by
/// `gens` under the global order `order`, sorted by ascending leading monomial.
pub fn reduced_groebner_basis(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    assert!(order.is_global(), "Buchberger needs a global order");
    let mut input: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.clone().sorted(order).monic())
        .collect();
    if input.iter().any(|g| g.is_constant()) {
        return vec![Polynomial::constant(Rational::ONE)];
    }
    input.sort_by(|a, b| order.cmp(a.lm(), b.lm()));

    let mut entries: Vec<Entry> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let add = |poly: Polynomial, sugar: u32, entries: &mut Vec<Entry>, pairs: &mut Vec<Pair>| {
        entries.push(Entry {
            poly,
            sugar,
            active: true,
        });
        let h = entries.len() - 1;
        update(entries, pairs, h);
    };

    for g in input {
        let active: Vec<&Polynomial> = entries
            .iter()
            .filter(|e| e.active)
            .map(|e| &e.poly)
            .collect();
        let r = reduce_full(g.clone(), &active, order);
        if r.is_zero() {
            continue;
        }
        let sugar = g.degree();
        add(r.monic(), sugar, &mut entries, &mut pairs);
    }

    while !pairs.is_empty() {
        let (k, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
            })
            .unwrap();
        let pair = pairs.swap_remove(k);
        let s = spoly(&entries[pair.i].poly, &entries[pair.j].poly, order);
        let active: Vec<&Polynomial> = entries
            .iter()
            .filter(|e| e.active)
            .map(|e| &e.poly)
            .collect();
        let r = reduce_head(s, &active, order);
        if r.is_zero() {
            continue;
        }
        let r = reduce_full(r, &active, order).monic();
        if r.is_constant() {
            return vec![Polynomial::constant(Rational::ONE)];
        }
        let sugar = pair.sugar.max(r.degree());
        add(r, sugar, &mut entries, &mut pairs);
    }

    let minimal: Vec<Polynomial> = entries
        .into_iter()
        .filter(|e| e.active)
        .map(|e| e.poly)
        .collect();
    interreduce(minimal, order)
}

/// Turns a minimal Gröbner basis into the reduced one.
fn interreduce(mut basis: Vec<Polynomial>, order: &MonomialOrder) -> Vec<Polynomial> {
    basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    let mut out = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let others: Vec<&Polynomial> = basis
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, g)| g)
            .collect();
        let g = &basis[k];
        let head = Polynomial::term(*g.lm(), g.lc().clone());
        let tail = Polynomial::from_sorted_unchecked(g.terms()[1..].to_vec());
        let tail = reduce_full(tail, &others, order);
        out.push(head.add(&tail, order).monic());
    }
    out
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    let basis: Vec<Polynomial> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.clone().sorted(order))
        .collect();
    let refs: Vec<&Polynomial> = basis.iter().collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = spoly(&basis[i], &basis[j], order);
            if !reduce_full(s, &refs, order).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::{parse_polynomial, parse_polynomial_list};

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn single_reduction() {
        let o = MonomialOrder::grevlex(4);
        let r = normal_form(&p("x3^2"), &[p("x3^2 - x1*x4")], &o);
        assert_eq!(r, p("x1*x4"));
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let o = MonomialOrder::grevlex(2);
        let gb = reduced_groebner_basis(&[p("x1^3 - x2^2")], &o);
        assert_eq!(gb, vec![p("x1^3 - x2^2")]);
    }

    #[test]
    fn twisted_cubic_lex() {
        let o = MonomialOrder::lex(3);
        let gens = parse_polynomial_list("x1^2 - x2, x1^3 - x3").unwrap();
        let gb = reduced_groebner_basis(&gens, &o);
        assert!(is_groebner_basis(&gb, &o));
        assert!(gb.contains(&p("x2^3 - x3^2")));
        for g in &gens {
            assert!(normal_form(g, &gb, &o).is_zero());
        }
    }

    #[test]
    fn spoly_examples() {
        // lt(p1) = x2*x4 under lex with x2 first
        let o = MonomialOrder::lex(5);
        let p1 = p("x3^2 - x2*x4").sorted(&o);
        assert_eq!(p1.lm().to_string(), "x2*x4");
        let s = spoly(&p1, &p("x2*x3"), &o);
        assert_eq!(s, p("x3^3"));
        // lt(p1) = x3^2 under grevlex
        let g = MonomialOrder::grevlex(5);
        let p1 = p("x3^2 - x2*x4").sorted(&g);
        assert_eq!(p1.lm().to_string(), "x3^2");
        let s = spoly(&p1, &p("x3*x5"), &g);
        assert_eq!(s.monic(), p("x2*x4*x5"));
        assert!(spoly(&p1, &p1, &g).is_zero());
    }

    #[test]
    fn unit_ideal() {
        let o = MonomialOrder::grevlex(2);
        let gb = reduced_groebner_basis(&[p("x1*x2 - 1"), p("x1")], &o);
        assert_eq!(gb, vec![p("1")]);
    }
}
