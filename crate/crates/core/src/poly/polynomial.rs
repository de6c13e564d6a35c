use std::cmp::Ordering;
use std::fmt;

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::rational::Rational;

pub type Term = (Monomial, Rational);

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept sorted in *descending* order with respect to the order the
/// polynomial was last built or re-sorted with; all arithmetic takes that
/// order explicitly. No zero coefficients are ever stored.
#[derive(Clone, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: vec![(m, c)],
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rational::ONE)
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(Monomial::var(i))
    }

    /// `a - b` for two monomials.
    pub fn binomial(a: Monomial, b: Monomial, order: &MonomialOrder) -> Self {
        Self::from_terms(vec![(a, Rational::ONE), (b, -Rational::ONE)], order)
    }

    /// Collects like terms, drops zeros and sorts under `order`.
    pub fn from_terms(mut terms: Vec<Term>, order: &MonomialOrder) -> Self {
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = &last.1 + &c,
                _ => out.push((m, c)),
            }
            if out.last().is_some_and(|t| t.1.is_zero()) {
                out.pop();
            }
        }
        out.retain(|t| !t.1.is_zero());
        Polynomial { terms: out }
    }

    /// Wraps terms that are already sorted, distinct and nonzero.
    pub(crate) fn from_sorted_unchecked(terms: Vec<Term>) -> Self {
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True for `m1 - m2` up to a scalar, the shape every toric relation has.
    pub fn is_pure_binomial(&self) -> bool {
        self.terms.len() == 2 && (&self.terms[0].1 + &self.terms[1].1).is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Leading monomial under the order the terms are sorted by.
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &Rational {
        &self.terms[0].1
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t.0)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|t| t.0 == *m)
            .map(|t| t.1.clone())
            .unwrap_or(Rational::ZERO)
    }

    /// Highest total degree of a term; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    /// Lowest total degree of a term; 0 for the zero polynomial.
    pub fn low_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).min().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.low_degree()
    }

    /// One past the highest variable index that occurs.
    pub fn nvars_used(&self) -> usize {
        self.terms
            .iter()
            .map(|t| t.0.nvars_used())
            .max()
            .unwrap_or(0)
    }

    /// Bitmask of all variables occurring in some term.
    pub fn support_mask(&self) -> u16 {
        self.terms.iter().fold(0, |acc, t| acc | t.0.support_mask())
    }

    /// The homogeneous component of lowest total degree (the initial form).
    pub fn lowest_form(&self) -> Polynomial {
        let d = self.low_degree();
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|t| t.0.degree() == d)
                .cloned()
                .collect(),
        }
    }

    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|t| t.0.degree() == d)
                .cloned()
                .collect(),
        }
    }

    pub fn resort(&mut self, order: &MonomialOrder) {
        self.terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    }

    pub fn sorted(mut self, order: &MonomialOrder) -> Self {
        self.resort(order);
        self
    }

    pub fn is_sorted_by(&self, order: &MonomialOrder) -> bool {
        self.terms
            .windows(2)
            .all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn make_monic(&mut self) {
        if self.is_zero() || self.lc().is_one() {
            return;
        }
        let inv = self.lc().recip();
        for t in &mut self.terms {
            t.1 = &t.1 * &inv;
        }
    }

    pub fn monic(mut self) -> Self {
        self.make_monic();
        self
    }

    /// Multiplication by a term keeps the sort order for every monomial order.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    pub fn add(&self, other: &Polynomial, order: &MonomialOrder) -> Polynomial {
        self.merge(other, &Rational::ONE, &Monomial::one(), order)
    }

    pub fn sub(&self, other: &Polynomial, order: &MonomialOrder) -> Polynomial {
        self.merge(other, &-Rational::ONE, &Monomial::one(), order)
    }

    /// `self + c * m * other` in a single merge pass.
    pub fn merge(
        &self,
        other: &Polynomial,
        c: &Rational,
        m: &Monomial,
        order: &MonomialOrder,
    ) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let shifted = |k: usize| other.terms[k].0.mul(m);
        let mut next_other = if other.terms.is_empty() {
            None
        } else {
            Some(shifted(0))
        };
        while i < self.terms.len() || j < other.terms.len() {
            let take = match (self.terms.get(i), next_other.as_ref()) {
                (Some(a), Some(b)) => order.cmp(&a.0, b),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => unreachable!(),
            };
            match take {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((next_other.unwrap(), &other.terms[j].1 * c));
                    j += 1;
                    next_other = (j < other.terms.len()).then(|| shifted(j));
                }
                Ordering::Equal => {
                    let s = &self.terms[i].1 + &(&other.terms[j].1 * c);
                    if !s.is_zero() {
                        out.push((self.terms[i].0, s));
                    }
                    i += 1;
                    j += 1;
                    next_other = (j < other.terms.len()).then(|| shifted(j));
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn mul(&self, other: &Polynomial, order: &MonomialOrder) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (m, c) in &other.terms {
            acc = acc.merge(self, c, m, order);
        }
        acc
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Rational::ONE)
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder. `order` must be global.
    pub fn div_exact(&self, divisor: &Polynomial, order: &MonomialOrder) -> Option<Polynomial> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while !rem.is_zero() {
            let q = rem.lm().div(divisor.lm())?;
            let c = rem.lc() / divisor.lc();
            rem = rem.merge(divisor, &-&c, &q, order);
            quot.push((q, c));
        }
        Some(Polynomial::from_terms(quot, order))
    }

    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial, order: &MonomialOrder) -> Self {
        Polynomial::from_terms(
            self.terms.iter().map(|(m, c)| (f(m), c.clone())).collect(),
            order,
        )
    }

    /// Sets variable `i` to zero.
    pub fn set_var_zero(&self, i: usize) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|t| t.0.exponent(i) == 0)
                .cloned()
                .collect(),
        }
    }

    /// Sets variable `i` to one.
    pub fn set_var_one(&self, i: usize, order: &MonomialOrder) -> Polynomial {
        self.map_monomials(|m| m.without(i), order)
    }

    pub fn shift_up(&self, k: usize, order: &MonomialOrder) -> Polynomial {
        self.map_monomials(|m| m.shift_up(k), order)
    }

    pub fn shift_down(&self, k: usize, order: &MonomialOrder) -> Polynomial {
        self.map_monomials(|m| m.shift_down(k), order)
    }

    pub fn permute(&self, perm: &[usize], order: &MonomialOrder) -> Polynomial {
        self.map_monomials(|m| m.permute(perm), order)
    }

    fn canonical_terms(&self) -> Vec<Term> {
        let n = self.nvars_used().max(1);
        let order = MonomialOrder::grevlex(n);
        let mut t = self.terms.clone();
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
        t
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.terms.len() != other.terms.len() {
            return false;
        }
        self.terms == other.terms || self.canonical_terms() == other.canonical_terms()
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Canonical text form: terms in graded reverse lex order (`x1 > x2 > ...`),
/// e.g. `x3^2 - x1*x4` or `-3/2*x1^2 + 5`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.canonical_terms().iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn collects_like_terms_and_prints() {
        let o = MonomialOrder::grevlex(4);
        let p = Polynomial::from_terms(
            vec![
                (m(&[1, 0, 0, 1]), Rational::from_int(-1)),
                (m(&[0, 0, 2]), Rational::ONE),
                (m(&[1, 0, 0, 1]), Rational::from_int(0)),
            ],
            &o,
        );
        assert_eq!(p.to_string(), "x3^2 - x1*x4");
        let q = Polynomial::from_terms(
            vec![(m(&[1]), Rational::ONE), (m(&[1]), -Rational::ONE)],
            &o,
        );
        assert!(q.is_zero());
        assert_eq!(q.to_string(), "0");
    }

    #[test]
    fn merge_and_multiply() {
        let o = MonomialOrder::grevlex(2);
        let x = Polynomial::var(0);
        let y = Polynomial::var(1);
        let s = x.add(&y, &o);
        let sq = s.mul(&s, &o);
        assert_eq!(sq.to_string(), "x1^2 + 2*x1*x2 + x2^2");
        let diff = sq.sub(&x.mul(&x, &o), &o);
        assert_eq!(diff.to_string(), "2*x1*x2 + x2^2");
        assert_eq!(sq.div_exact(&s, &o), Some(s.clone()));
        assert_eq!(sq.div_exact(&x, &o), None);
    }

    #[test]
    fn forms_and_substitution() {
        let o = MonomialOrder::grevlex(2);
        let p = Polynomial::from_terms(
            vec![
                (m(&[1]), Rational::ONE),
                (m(&[2]), -Rational::ONE),
                (m(&[0, 3]), Rational::new(1, 2)),
            ],
            &o,
        );
        assert_eq!(p.lowest_form().to_string(), "x1");
        assert_eq!(p.degree(), 3);
        assert_eq!(p.set_var_zero(0).to_string(), "1/2*x2^3");
        assert!(!p.is_homogeneous());
    }

    #[test]
    fn equality_ignores_storage_order() {
        let a = Polynomial::binomial(m(&[2]), m(&[0, 1]), &MonomialOrder::grevlex(2));
        let b = a.clone().sorted(&MonomialOrder::neg_deg_revlex(2));
        assert_eq!(a, b);
        assert!(a.is_pure_binomial());
    }
}
