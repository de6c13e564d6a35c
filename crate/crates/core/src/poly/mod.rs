//! Exact polynomial algebra over the rationals: monomial orders, division,
//! Buchberger and Mora bases, ideal operations and Hilbert numerators.

pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod monomial;
pub mod mora;
pub mod order;
pub mod polynomial;
pub mod rational;
pub mod text;

pub use groebner::{is_groebner_basis, normal_form, reduced_groebner_basis, spoly};
pub use hilbert::{hilbert_numerator, IntPoly};
pub use ideal::Ideal;
pub use monomial::{Monomial, MAX_VARS};
pub use mora::standard_basis;
pub use order::{MonomialOrder, OrderKind};
pub use polynomial::Polynomial;
pub use rational::Rational;
pub use text::{parse_polynomial, parse_polynomial_list};

/// `buchberger` under its textbook name.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> Vec<Polynomial> {
    ideal.basis(order).as_ref().clone()
}

/// Standard basis of `ideal` for the negative degree reverse lex order.
pub fn standard_basis_local(ideal: &Ideal) -> Vec<Polynomial> {
    ideal
        .basis(&MonomialOrder::neg_deg_revlex(ideal.nvars()))
        .as_ref()
        .clone()
}
