use std::cmp::Ordering;
use std::fmt;

use super::monomial::{Monomial, MAX_VARS};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrevLex,
    /// The first `block` variables (by priority) are compared first with
    /// graded reverse lex; ties are broken by graded reverse lex on the rest.
    Elimination {
        block: usize,
    },
    /// Weight vector (indexed by variable) compared first, then graded
    /// reverse lex. Global whenever all weights are positive.
    Weighted {
        weights: Vec<u64>,
    },
    /// Local order: smaller total degree is *larger*, ties by reverse lex.
    NegDegRevLex,
}

/// A monomial order on `nvars` variables with an explicit variable priority.
///
/// `priority[0]` is the largest variable. The default priority is
/// `x1 > x2 > ... > xn`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: [u8; MAX_VARS],
    nvars: usize,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        Self::with_priority(kind, &(0..nvars).collect::<Vec<_>>())
    }

    /// `priority` lists every variable index once, largest first.
    pub fn with_priority(kind: OrderKind, priority: &[usize]) -> Self {
        let nvars = priority.len();
        assert!(nvars <= MAX_VARS, "too many variables");
        let mut seen = [false; MAX_VARS];
        let mut p = [0u8; MAX_VARS];
        for (slot, &v) in priority.iter().enumerate() {
            assert!(v < nvars && !seen[v], "priority is not a permutation");
            seen[v] = true;
            p[slot] = v as u8;
        }
        if let OrderKind::Elimination { block } = kind {
            assert!(block <= nvars, "elimination block larger than ring");
        }
        if let OrderKind::Weighted { weights } = &kind {
            assert_eq!(weights.len(), nvars, "weight vector length");
        }
        MonomialOrder {
            kind,
            priority: p,
            nvars,
        }
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::GrevLex, nvars)
    }

    pub fn elimination(block: usize, nvars: usize) -> Self {
        Self::new(OrderKind::Elimination { block }, nvars)
    }

    pub fn weighted(weights: Vec<u64>) -> Self {
        let n = weights.len();
        Self::new(OrderKind::Weighted { weights }, n)
    }

    pub fn neg_deg_revlex(nvars: usize) -> Self {
        Self::new(OrderKind::NegDegRevLex, nvars)
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn priority(&self) -> Vec<usize> {
        self.priority[..self.nvars]
            .iter()
            .map(|&v| v as usize)
            .collect()
    }

    pub fn is_global(&self) -> bool {
        match &self.kind {
            OrderKind::NegDegRevLex => false,
            OrderKind::Weighted { weights } => weights.iter().all(|&w| w > 0),
            _ => true,
        }
    }

    /// Total degree compatible (graded) orders: leading terms of homogeneous
    /// polynomials never change under homogeneous operations.
    pub fn is_graded(&self) -> bool {
        matches!(self.kind, OrderKind::GrevLex)
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match &self.kind {
            OrderKind::Lex => self.lex_cmp(a, b, 0, self.nvars),
            OrderKind::GrevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| self.revlex_cmp(a, b, 0, self.nvars)),
            OrderKind::Elimination { block } => {
                let block = *block;
                self.partial_degree(a, 0, block)
                    .cmp(&self.partial_degree(b, 0, block))
                    .then_with(|| self.revlex_cmp(a, b, 0, block))
                    .then_with(|| {
                        self.partial_degree(a, block, self.nvars)
                            .cmp(&self.partial_degree(b, block, self.nvars))
                    })
                    .then_with(|| self.revlex_cmp(a, b, block, self.nvars))
            }
            OrderKind::Weighted { weights } => a
                .weighted_degree(weights)
                .cmp(&b.weighted_degree(weights))
                .then_with(|| a.degree().cmp(&b.degree()))
                .then_with(|| self.revlex_cmp(a, b, 0, self.nvars)),
            OrderKind::NegDegRevLex => b
                .degree()
                .cmp(&a.degree())
                .then_with(|| self.revlex_cmp(a, b, 0, self.nvars)),
        }
    }

    fn partial_degree(&self, m: &Monomial, from: usize, to: usize) -> u32 {
        self.priority[from..to]
            .iter()
            .map(|&v| m.exponent(v as usize))
            .sum()
    }

    fn lex_cmp(&self, a: &Monomial, b: &Monomial, from: usize, to: usize) -> Ordering {
        for &v in &self.priority[from..to] {
            match a.exponent(v as usize).cmp(&b.exponent(v as usize)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// Reverse lex tie-break: the monomial with the smaller exponent in the
    /// smallest differing variable is larger.
    fn revlex_cmp(&self, a: &Monomial, b: &Monomial, from: usize, to: usize) -> Ordering {
        for &v in self.priority[from..to].iter().rev() {
            match a.exponent(v as usize).cmp(&b.exponent(v as usize)) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .priority()
            .iter()
            .map(|v| format!("x{}", v + 1))
            .collect();
        write!(f, "{:?}[{}]", self.kind, names.join(">"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_matches_textbook() {
        let o = MonomialOrder::grevlex(3);
        // x1^2 x3 vs x1 x2^2 : same degree, smaller x3 exponent wins
        assert_eq!(o.cmp(&m(&[1, 2, 0]), &m(&[2, 0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1])), Ordering::Greater);
        // x3^2 > x1*x4 in five variables
        let o5 = MonomialOrder::grevlex(5);
        assert_eq!(o5.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn lex_and_priority() {
        let o = MonomialOrder::lex(3);
        assert_eq!(o.cmp(&m(&[1]), &m(&[0, 5, 5])), Ordering::Greater);
        let p = MonomialOrder::with_priority(OrderKind::Lex, &[2, 1, 0]);
        assert_eq!(p.cmp(&m(&[1]), &m(&[0, 0, 1])), Ordering::Less);
    }

    #[test]
    fn elimination_puts_block_first() {
        let o = MonomialOrder::elimination(1, 3);
        assert_eq!(o.cmp(&m(&[1]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn local_order_prefers_low_degree() {
        let o = MonomialOrder::neg_deg_revlex(2);
        assert!(!o.is_global());
        assert_eq!(o.cmp(&m(&[1]), &m(&[2])), Ordering::Greater);
        assert_eq!(o.cmp(&Monomial::one(), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn weighted_order() {
        let o = MonomialOrder::weighted(vec![2, 3]);
        assert_eq!(o.cmp(&m(&[3]), &m(&[0, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[3])), Ordering::Less);
    }
}
