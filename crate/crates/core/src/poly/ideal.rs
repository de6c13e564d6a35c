use std::fmt;
use std::sync::{Arc, Mutex};

use super::groebner::{normal_form, reduced_groebner_basis};
use super::monomial::Monomial;
use super::mora;
use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use super::rational::Rational;
use super::text::{format_polynomial_list, parse_polynomial_list};
use crate::error::Result;

type BasisCache = Mutex<Vec<(MonomialOrder, Arc<Vec<Polynomial>>)>>;

/// An ideal of `Q[x1, ..., xn]` given by generators, with a per-order cache
/// of computed Gröbner (or standard) bases.
pub struct Ideal {
    gens: Vec<Polynomial>,
    nvars: usize,
    cache: BasisCache,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            gens: self.gens.clone(),
            nvars: self.nvars,
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal[{}]({})", self.nvars, self)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_polynomial_list(&self.gens))
    }
}

impl Ideal {
    pub fn new(gens: Vec<Polynomial>, nvars: usize) -> Self {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let used = gens.iter().map(|g| g.nvars_used()).max().unwrap_or(0);
        assert!(
            used <= nvars,
            "generator uses x{used} in a ring with {nvars} variables"
        );
        Ideal {
            gens,
            nvars,
            cache: Mutex::new(Vec::new()),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::new(Vec::new(), nvars)
    }

    pub fn unit(nvars: usize) -> Self {
        Self::new(vec![Polynomial::constant(Rational::ONE)], nvars)
    }

    /// The ideal generated by the listed variables (zero-based indices).
    pub fn variables(vars: &[usize], nvars: usize) -> Self {
        Self::new(vars.iter().map(|&v| Polynomial::var(v)).collect(), nvars)
    }

    /// Parses a comma-separated list; `nvars` defaults to the highest
    /// variable that occurs.
    pub fn parse(text: &str, nvars: Option<usize>) -> Result<Self> {
        let gens = parse_polynomial_list(text)?;
        let used = gens
            .iter()
            .map(|g| g.nvars_used())
            .max()
            .unwrap_or(1)
            .max(1);
        Ok(Self::new(gens, nvars.unwrap_or(used).max(used)))
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_monomial())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn grevlex(&self) -> MonomialOrder {
        MonomialOrder::grevlex(self.nvars)
    }

    /// Reduced Gröbner basis for a global order, minimal standard basis for
    /// a local one. Cached per order.
    pub fn basis(&self, order: &MonomialOrder) -> Arc<Vec<Polynomial>> {
        assert_eq!(order.nvars(), self.nvars, "order ring mismatch");
        if let Some((_, b)) = self.cache.lock().unwrap().iter().find(|(o, _)| o == order) {
            return Arc::clone(b);
        }
        let b = if order.is_global() {
            reduced_groebner_basis(&self.gens, order)
        } else {
            mora::standard_basis(&self.gens, order)
        };
        let b = Arc::new(b);
        self.cache
            .lock()
            .unwrap()
            .push((order.clone(), Arc::clone(&b)));
        b
    }

    pub fn groebner_basis(&self) -> Arc<Vec<Polynomial>> {
        self.basis(&self.grevlex())
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().iter().any(|g| g.is_constant())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        if f.is_zero() {
            return true;
        }
        let order = self.grevlex();
        normal_form(f, &self.groebner_basis(), &order).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality as ideals, via reduced Gröbner bases.
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.nvars == other.nvars && *self.groebner_basis() == *other.groebner_basis()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(gens, self.nvars.max(other.nvars))
    }

    pub fn with_generator(&self, f: Polynomial) -> Ideal {
        let mut gens = self.gens.clone();
        gens.push(f);
        Ideal::new(gens, self.nvars)
    }

    /// Leading monomials of the reduced Gröbner basis under `order`.
    pub fn leading_monomials(&self, order: &MonomialOrder) -> Vec<Monomial> {
        self.basis(order).iter().map(|g| *g.lm()).collect()
    }

    /// `I ∩ Q[x_{k+1}, ..., x_n]`: the generators of the result do not
    /// involve the first `k` variables (the ring is unchanged).
    pub fn eliminate(&self, k: usize) -> Ideal {
        let order = MonomialOrder::elimination(k, self.nvars);
        let mask: u16 = ((1u32 << k) - 1) as u16;
        let gens: Vec<Polynomial> = self
            .basis(&order)
            .iter()
            .filter(|g| g.support_mask() & mask == 0)
            .cloned()
            .collect();
        Ideal::new(gens, self.nvars)
    }

    /// Adds `k` fresh variables in front of the existing ones.
    fn lifted(&self, k: usize) -> (Vec<Polynomial>, MonomialOrder) {
        let order = MonomialOrder::elimination(k, self.nvars + k);
        let gens = self.gens.iter().map(|g| g.shift_up(k, &order)).collect();
        (gens, order)
    }

    fn drop_front(gens: &[Polynomial], k: usize, nvars: usize) -> Ideal {
        let o = MonomialOrder::grevlex(nvars);
        let mask: u16 = ((1u32 << k) - 1) as u16;
        Ideal::new(
            gens.iter()
                .filter(|g| g.support_mask() & mask == 0)
                .map(|g| g.shift_down(k, &o))
                .collect(),
            nvars,
        )
    }

    /// `I ∩ J` via `t*I + (1-t)*J` and elimination of `t`.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        let n = self.nvars.max(other.nvars);
        if self.is_zero() || other.is_zero() {
            return Ideal::zero(n);
        }
        let order = MonomialOrder::elimination(1, n + 1);
        let t = Polynomial::var(0);
        let one_minus_t = Polynomial::constant(Rational::ONE).sub(&t, &order);
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(g.shift_up(1, &order).mul(&t, &order));
        }
        for g in &other.gens {
            gens.push(g.shift_up(1, &order).mul(&one_minus_t, &order));
        }
        let gb = reduced_groebner_basis(&gens, &order);
        Self::drop_front(&gb, 1, n)
    }

    /// The ideal quotient `I : (f)`, returned by its reduced Gröbner basis.
    pub fn colon(&self, f: &Polynomial) -> Ideal {
        if f.is_zero() || self.contains(f) {
            return Ideal::unit(self.nvars);
        }
        let principal = Ideal::new(vec![f.clone()], self.nvars);
        let meet = self.intersect(&principal);
        let order = self.grevlex();
        let f = f.clone().sorted(&order);
        let quotients: Vec<Polynomial> = meet
            .gens
            .iter()
            .map(|g| {
                g.clone()
                    .sorted(&order)
                    .div_exact(&f, &order)
                    .expect("element of I ∩ (f) must be divisible by f")
            })
            .collect();
        let q = Ideal::new(quotients, self.nvars);
        let gb = q.groebner_basis().as_ref().clone();
        Ideal::new(gb, self.nvars)
    }

    /// `I : J` as the intersection of the quotients by generators of `J`.
    pub fn colon_ideal(&self, other: &Ideal) -> Ideal {
        let mut acc = Ideal::unit(self.nvars);
        for g in &other.gens {
            let q = self.colon(g);
            acc = if acc.is_unit() { q } else { acc.intersect(&q) };
        }
        let gb = acc.groebner_basis().as_ref().clone();
        Ideal::new(gb, self.nvars)
    }

    /// `I : f^∞` via `I + (1 - z f)` and elimination of `z`.
    pub fn saturate(&self, f: &Polynomial) -> Ideal {
        let (mut gens, order) = self.lifted(1);
        let zf = f.shift_up(1, &order).mul(&Polynomial::var(0), &order);
        gens.push(Polynomial::constant(Rational::ONE).sub(&zf, &order));
        let gb = reduced_groebner_basis(&gens, &order);
        Self::drop_front(&gb, 1, self.nvars)
    }

    /// Substitutes `x_i = 0` in every generator.
    pub fn set_var_zero(&self, i: usize) -> Ideal {
        Ideal::new(
            self.gens.iter().map(|g| g.set_var_zero(i)).collect(),
            self.nvars,
        )
    }

    /// A minimal generating set for an ideal that is homogeneous with
    /// respect to the positive `weights`, extracted from the generators.
    ///
    /// Candidates (generators plus the Gröbner basis) are sorted by weighted
    /// degree; a candidate is kept unless it already lies in the ideal of the
    /// kept ones.
    pub fn minimal_generators_graded(&self, weights: &[u64]) -> Vec<Polynomial> {
        assert_eq!(weights.len(), self.nvars);
        let order = MonomialOrder::weighted(weights.to_vec());
        let wdeg = |p: &Polynomial| p.lm().weighted_degree(weights);
        let mut cands: Vec<Polynomial> = self
            .basis(&order)
            .iter()
            .map(|g| g.clone().sorted(&order))
            .collect();
        cands.sort_by(|a, b| {
            wdeg(a)
                .cmp(&wdeg(b))
                .then_with(|| order.cmp(a.lm(), b.lm()))
        });
        let mut kept: Vec<Polynomial> = Vec::new();
        let mut kept_gb: Vec<Polynomial> = Vec::new();
        for c in cands {
            if !kept.is_empty() && normal_form(&c, &kept_gb, &order).is_zero() {
                continue;
            }
            kept.push(c);
            kept_gb = reduced_groebner_basis(&kept, &order);
        }
        let display = self.grevlex();
        kept.into_iter().map(|g| g.sorted(&display)).collect()
    }

    /// Minimal generators of a standard-graded homogeneous ideal.
    pub fn minimal_generators(&self) -> Vec<Polynomial> {
        self.minimal_generators_graded(&vec![1; self.nvars])
    }
}
