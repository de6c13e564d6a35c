//! The two families of embedding dimension five quadratic semigroups with
//! non-Cohen–Macaulay tangent cone, the construction in arbitrary
//! embedding dimension, quadratic gluing and the complete intersection test.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Ideal, Monomial, MonomialOrder, Polynomial};
use crate::semigroup::NumericalSemigroup;
use crate::tangent_cone::toric_ideal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyKind {
    I,
    II,
}

impl FamilyKind {
    /// `(c, d)` in `<8, 4u', 4u+2u', 4u''+2u+c u', 6u+d u'+4u''-8>`.
    fn coefficients(self) -> (u64, u64) {
        match self {
            FamilyKind::I => (1, 7),
            FamilyKind::II => (3, 9),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub kind: FamilyKind,
    pub u: u64,
    pub u_prime: u64,
    pub u_dprime: u64,
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "family {:?} (u, u', u'') = ({}, {}, {})",
            self.kind, self.u, self.u_prime, self.u_dprime
        )
    }
}

impl FamilyParams {
    pub fn new(kind: FamilyKind, u: u64, u_prime: u64, u_dprime: u64) -> Result<Self> {
        if u == 0 || u_prime == 0 || u_dprime == 0 {
            return Err(Error::InvalidParams(
                "family parameters must be positive".into(),
            ));
        }
        if u_prime <= 1 || u_prime.is_multiple_of(2) {
            return Err(Error::InvalidParams(format!(
                "u' must be odd and greater than 1, got {u_prime}"
            )));
        }
        Ok(FamilyParams {
            kind,
            u,
            u_prime,
            u_dprime,
        })
    }

    /// The five listed values in template order (not sorted).
    pub fn template_values(&self) -> [u64; 5] {
        let (c, d) = self.kind.coefficients();
        let (u, v, w) = (self.u, self.u_prime, self.u_dprime);
        [
            8,
            4 * v,
            4 * u + 2 * v,
            4 * w + 2 * u + c * v,
            6 * u + d * v + 4 * w - 8,
        ]
    }
}

/// The family member for `p`, provided its five values are a minimal
/// generating set.
pub fn family_member(p: &FamilyParams) -> Result<NumericalSemigroup> {
    let p = FamilyParams::new(p.kind, p.u, p.u_prime, p.u_dprime)?;
    NumericalSemigroup::from_minimal(&p.template_values())
}

/// Matches the sorted generators of `h` against every slot assignment of
/// both templates and returns the first admissible parameters.
pub fn classify_non_cm_quadratic_5(h: &NumericalSemigroup) -> Option<FamilyParams> {
    let g = h.generators();
    if g.len() != 5 || g[0] != 8 {
        return None;
    }
    let rest = [g[1], g[2], g[3], g[4]];
    for kind in [FamilyKind::I, FamilyKind::II] {
        let (c, d) = kind.coefficients();
        for perm in permutations4() {
            let [s2, s3, s4, s5] = perm.map(|i| rest[i]);
            if s2 % 4 != 0 {
                continue;
            }
            let v = s2 / 4;
            if v <= 1 || v % 2 == 0 || s3 <= 2 * v || (s3 - 2 * v) % 4 != 0 {
                continue;
            }
            let u = (s3 - 2 * v) / 4;
            if s4 <= 2 * u + c * v || (s4 - 2 * u - c * v) % 4 != 0 {
                continue;
            }
            let w = (s4 - 2 * u - c * v) / 4;
            if 6 * u + d * v + 4 * w != s5 + 8 {
                continue;
            }
            return Some(FamilyParams {
                kind,
                u,
                u_prime: v,
                u_dprime: w,
            });
        }
    }
    None
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|i| p.contains(&i)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub n: usize,
    /// `u_1, ..., u_n`.
    pub u: Vec<u64>,
}

impl ConstructionParams {
    pub fn new(n: usize, u: Vec<u64>) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParams(format!(
                "n must be at least 3, got {n}"
            )));
        }
        if n + 2 >= crate::poly::MAX_VARS {
            return Err(Error::InvalidParams(format!("n = {n} is too large")));
        }
        if u.len() != n {
            return Err(Error::InvalidParams(format!(
                "expected {n} values u_1..u_{n}, got {}",
                u.len()
            )));
        }
        if u.contains(&0) {
            return Err(Error::InvalidParams("u_i must be positive".into()));
        }
        if u[0] < 3 || u[0].is_multiple_of(2) {
            return Err(Error::InvalidParams(format!(
                "u_1 must be odd and at least 3, got {}",
                u[0]
            )));
        }
        Ok(ConstructionParams { n, u })
    }
}

/// Output of the construction: generators in construction order, the
/// semigroup (sorted), and the predicted binomials.
#[derive(Clone, Debug)]
pub struct Construction {
    pub params: ConstructionParams,
    /// `a_1, ..., a_{n+2}` in construction order.
    pub generators: Vec<u64>,
    pub semigroup: NumericalSemigroup,
    /// Relations of `H_{n+1}`: `x2^2 - x1^u1` and `x_{j+1}^2 - x1^{u_j} x_j`,
    /// in construction variables.
    pub prefix_relations: Vec<Polynomial>,
    /// `f_1, ..., f_{n+2}`, in construction variables.
    pub f_relations: Vec<Polynomial>,
    /// `sorted_position[i]` is the index of `a_{i+1}` in the sorted list.
    pub sorted_position: Vec<usize>,
}

impl Construction {
    /// All predicted relations with variables renamed so that `x_k` belongs
    /// to the `k`-th smallest generator.
    pub fn sorted_relations(&self) -> Vec<Polynomial> {
        let n = self.generators.len();
        let o = MonomialOrder::grevlex(n);
        self.prefix_relations
            .iter()
            .chain(&self.f_relations)
            .map(|f| f.permute(&self.sorted_position, &o))
            .collect()
    }

    /// `H_i = <a_1, ..., a_i>` divided by its gcd, for `i = 2..=n+1`.
    pub fn prefixes(&self) -> Vec<NumericalSemigroup> {
        (2..=self.params.n + 1)
            .map(|i| {
                let g = self.generators[..i].iter().fold(0u64, |a, &b| a.gcd(&b));
                let scaled: Vec<u64> = self.generators[..i].iter().map(|a| a / g).collect();
                NumericalSemigroup::minimal_generators(&scaled).expect("gcd removed")
            })
            .collect()
    }
}

fn monomial(n: usize, entries: &[(usize, u32)]) -> Monomial {
    let mut e = vec![0u32; n];
    for &(i, k) in entries {
        e[i] += k;
    }
    Monomial::from_exponents(&e)
}

/// `a_1 = 2^n`, `a_k = sum_{j<k} 2^{n-k+j} u_j` for `k = 2..n+1`, and
/// `a_{n+2} = a_2 + ... + a_{n+1} - a_1`.
pub fn construct_general(p: &ConstructionParams) -> Result<Construction> {
    let p = ConstructionParams::new(p.n, p.u.clone())?;
    let n = p.n;
    let mut a = vec![1u64 << n];
    for k in 2..=n + 1 {
        let v: u64 = (1..k).map(|j| (1u64 << (n + j - k)) * p.u[j - 1]).sum();
        a.push(v);
    }
    let last: u64 = a[1..].iter().sum::<u64>() - a[0];
    a.push(last);
    let semigroup = NumericalSemigroup::from_minimal(&a)?;

    let nv = n + 2;
    let o = MonomialOrder::grevlex(nv);
    let bin = |l: Monomial, r: Monomial| Polynomial::binomial(l, r, &o);
    let u = |j: usize| p.u[j - 1] as u32;
    // variable x_k has index k-1
    let mut prefix = vec![bin(monomial(nv, &[(1, 2)]), monomial(nv, &[(0, u(1))]))];
    for j in 2..=n {
        prefix.push(bin(
            monomial(nv, &[(j, 2)]),
            monomial(nv, &[(0, u(j)), (j - 1, 1)]),
        ));
    }
    let top = nv - 1;
    let mut f = vec![bin(
        monomial(nv, &[(0, 1), (top, 1)]),
        monomial(nv, &(1..=n).map(|j| (j, 1)).collect::<Vec<_>>()),
    )];
    for i in 2..=n + 1 {
        let e: u32 = (1..i).map(u).sum::<u32>() - 1;
        let mut rhs = vec![(0, e)];
        rhs.extend((i + 1..=n + 1).map(|j| (j - 1, 1)));
        f.push(bin(
            monomial(nv, &[(i - 1, 1), (top, 1)]),
            monomial(nv, &rhs),
        ));
    }
    let e: u32 = (1..=n).map(u).sum::<u32>() - 2;
    let mut rhs = vec![(0, e)];
    rhs.extend((2..=n).map(|j| (j - 1, 1)));
    f.push(bin(monomial(nv, &[(top, 2)]), monomial(nv, &rhs)));

    let sorted = semigroup.generators();
    let sorted_position = a
        .iter()
        .map(|x| sorted.iter().position(|y| y == x).unwrap())
        .collect();
    Ok(Construction {
        params: p,
        generators: a,
        semigroup,
        prefix_relations: prefix,
        f_relations: f,
        sorted_position,
    })
}

/// `<2L, ell>` for an odd `ell` in `L`, reduced to minimal generators.
///
/// Quadraticity transfers between `L` and the result only when `ell` is not a
/// minimal generator of `L`: `<2L, 13>` for `L = <8,12,13,18,35>` drops `26`
/// and is not quadratic.
pub fn glue_quadratic(l: &NumericalSemigroup, ell: u64) -> Result<NumericalSemigroup> {
    if ell.is_multiple_of(2) {
        return Err(Error::NotOdd { value: ell });
    }
    if !l.contains(ell) {
        return Err(Error::NotMember { value: ell });
    }
    let mut gens: Vec<u64> = l.generators().iter().map(|g| 2 * g).collect();
    gens.push(ell);
    NumericalSemigroup::minimal_generators(&gens)
}

/// `I_H` is a complete intersection: it has `embdim - 1` minimal generators.
pub fn is_ci(h: &NumericalSemigroup) -> bool {
    if h.embdim() == 1 {
        return true;
    }
    toric_ideal(h).gens().len() == h.embdim() - 1
}

/// The predicted relations of a construction as an ideal in sorted
/// variables, for comparison with [`toric_ideal`].
pub fn predicted_ideal(c: &Construction) -> Ideal {
    Ideal::new(c.sorted_relations(), c.generators.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tangent_cone::{initial_forms_ideal, is_cm_ideal, is_quadratic};

    fn h(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::minimal_generators(g).unwrap()
    }

    #[test]
    fn family_examples() {
        let p = FamilyParams::new(FamilyKind::I, 3, 3, 1).unwrap();
        assert_eq!(p.template_values(), [8, 12, 18, 13, 35]);
        assert_eq!(
            family_member(&p).unwrap().generators(),
            &[8, 12, 13, 18, 35]
        );
        let q = FamilyParams::new(FamilyKind::II, 1, 3, 1).unwrap();
        assert_eq!(q.template_values(), [8, 12, 10, 15, 29]);
        let s = family_member(&q).unwrap();
        assert_eq!(s.generators(), &[8, 10, 12, 15, 29]);
        assert!(!s.is_cm_tangent_cone().is_cm());
        assert!(FamilyParams::new(FamilyKind::I, 1, 2, 1).is_err());
        assert!(FamilyParams::new(FamilyKind::I, 1, 1, 1).is_err());
        assert!(FamilyParams::new(FamilyKind::I, 0, 3, 1).is_err());
    }

    #[test]
    fn family_grid_is_minimal() {
        for u in 1..=9 {
            for v in (3..=9).step_by(2) {
                for w in 1..=9 {
                    for kind in [FamilyKind::I, FamilyKind::II] {
                        let p = FamilyParams::new(kind, u, v, w).unwrap();
                        assert_eq!(family_member(&p).unwrap().embdim(), 5, "{p}");
                    }
                }
            }
        }
    }

    #[test]
    fn classification_examples() {
        let p = classify_non_cm_quadratic_5(&h(&[8, 12, 13, 18, 35])).unwrap();
        assert_eq!(
            (p.kind, p.u, p.u_prime, p.u_dprime),
            (FamilyKind::I, 3, 3, 1)
        );
        assert_eq!(classify_non_cm_quadratic_5(&h(&[5, 6, 7, 8, 9])), None);
        assert_eq!(classify_non_cm_quadratic_5(&h(&[9, 17, 20, 23, 25])), None);
        let q = classify_non_cm_quadratic_5(&h(&[8, 10, 12, 15, 29])).unwrap();
        assert_eq!(q.kind, FamilyKind::II);
    }

    #[test]
    fn construction_golden() {
        let c = construct_general(&ConstructionParams::new(3, vec![3, 3, 1]).unwrap()).unwrap();
        assert_eq!(c.generators, vec![8, 12, 18, 13, 35]);
        assert_eq!(c.semigroup.generators(), &[8, 12, 13, 18, 35]);
        let f1 = c.f_relations[0].to_string();
        assert_eq!(f1, "-x2*x3*x4 + x1*x5");
        let toric = toric_ideal(&c.semigroup);
        assert!(toric.same_ideal(&predicted_ideal(&c)));
    }

    #[test]
    fn construction_n4() {
        let c = construct_general(&ConstructionParams::new(4, vec![3, 1, 1, 1]).unwrap()).unwrap();
        assert_eq!(c.generators, vec![16, 24, 20, 18, 17, 63]);
        let s = &c.semigroup;
        assert_eq!(s.generators(), &[16, 17, 18, 20, 24, 63]);
        assert!(toric_ideal(s).same_ideal(&predicted_ideal(&c)));
        let star = initial_forms_ideal(&toric_ideal(s));
        assert!(is_quadratic(&star));
        assert!(!is_cm_ideal(&star));
        for prefix in c.prefixes() {
            assert!(is_ci(&prefix), "{prefix}");
        }
    }

    #[test]
    fn construction_rejects_bad_params() {
        assert!(ConstructionParams::new(3, vec![2, 3, 1]).is_err());
        assert!(ConstructionParams::new(2, vec![3, 3]).is_err());
        assert!(ConstructionParams::new(3, vec![3, 3]).is_err());
        assert!(ConstructionParams::new(3, vec![3, 0, 1]).is_err());
    }

    #[test]
    fn gluing_examples() {
        assert_eq!(
            glue_quadratic(&h(&[2, 3]), 3).unwrap().generators(),
            &[3, 4]
        );
        assert_eq!(
            glue_quadratic(&h(&[4, 5, 6]), 5).unwrap().generators(),
            &[5, 8, 12]
        );
        assert!(matches!(
            glue_quadratic(&h(&[2, 3]), 4),
            Err(Error::NotOdd { value: 4 })
        ));
        assert!(matches!(
            glue_quadratic(&h(&[4, 5, 6]), 7),
            Err(Error::NotMember { value: 7 })
        ));
    }

    #[test]
    fn complete_intersections() {
        assert!(is_ci(&h(&[2, 3])));
        assert!(is_ci(&h(&[16, 17, 18, 20, 24])));
        assert!(!is_ci(&h(&[8, 12, 13, 18, 35])));
    }
}
