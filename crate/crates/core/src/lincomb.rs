//! Finite formal linear combinations with exact rational coefficients,
//! tensor-square basis elements, and the symmetry inner products.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::tree::{Forest, RootedTree};

pub fn rat_uint(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A finite formal sum of basis elements with nonzero rational coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by the basis order, so iteration,
/// display and serialization are deterministic. Zero coefficients are purged
/// on every mutation; equality is term-wise.
#[derive(Clone, PartialEq, Eq)]
pub struct LinComb<B: Ord + Clone> {
    terms: BTreeMap<B, BigRational>,
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    /// The single term `1 * basis`.
    pub fn unit(basis: B) -> Self {
        Self::term(basis, BigRational::one())
    }

    pub fn term(basis: B, coeff: BigRational) -> Self {
        let mut s = Self::zero();
        s.add_term(basis, coeff);
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (B, BigRational)>>(iter: I) -> Self {
        let mut s = Self::zero();
        for (b, c) in iter {
            s.add_term(b, c);
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &BigRational)> {
        self.terms.iter()
    }

    /// Coefficient of `basis` (zero when absent).
    pub fn coeff(&self, basis: &B) -> BigRational {
        self.terms.get(basis).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, basis: B, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(basis);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in other.iter() {
            out.add_term(b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in other.iter() {
            out.add_term(b.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(b, c)| (b.clone(), c * k)).collect(),
        }
    }

    /// Linear extension of a basis map `f` into another free module.
    pub fn apply_linear<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            for (b2, c2) in f(b).iter() {
                out.add_term(b2.clone(), c * c2);
            }
        }
        out
    }

    /// Pushes each basis element through `f`, merging collisions.
    pub fn map_basis<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> C) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Bilinear combination: sum of `cx * cy * f(bx, by)` over all term pairs.
    pub fn combine<C: Ord + Clone>(
        x: &Self,
        y: &Self,
        mut f: impl FnMut(&B, &B) -> C,
    ) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (bx, cx) in x.iter() {
            for (by, cy) in y.iter() {
                out.add_term(f(bx, by), cx * cy);
            }
        }
        out
    }

    /// Sum of all coefficients (the total mass of the combination).
    pub fn mass(&self) -> BigRational {
        let mut acc = BigRational::zero();
        for (_, c) in self.iter() {
            acc += c;
        }
        acc
    }

    /// JSON form: array of `{"coeff": "p/q", "basis": ...}` in basis order.
    pub fn to_json(&self, basis_json: impl Fn(&B) -> serde_json::Value) -> serde_json::Value {
        serde_json::Value::Array(
            self.iter()
                .map(|(b, c)| {
                    serde_json::json!({
                        "coeff": c.to_string(),
                        "basis": basis_json(b),
                    })
                })
                .collect(),
        )
    }
}

impl<B: Ord + Clone> Default for LinComb<B> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Ord + Clone> std::ops::Add for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: Self) -> LinComb<B> {
        LinComb::add(self, rhs)
    }
}

impl<B: Ord + Clone> std::ops::Sub for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: Self) -> LinComb<B> {
        LinComb::sub(self, rhs)
    }
}

impl<B: Ord + Clone + fmt::Display> fmt::Display for LinComb<B> {
    fmt_lincomb!();
}

macro_rules! fmt_lincomb {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if self.is_zero() {
                return f.write_str("0");
            }
            for (i, (b, c)) in self.iter().enumerate() {
                let mag = c.abs();
                if i == 0 {
                    if c.is_negative() {
                        f.write_str("-")?;
                    }
                } else if c.is_negative() {
                    f.write_str(" - ")?;
                } else {
                    f.write_str(" + ")?;
                }
                if mag.is_one() {
                    write!(f, "{b}")?;
                } else {
                    write!(f, "{mag}*{b}")?;
                }
            }
            Ok(())
        }
    };
}
use fmt_lincomb;

/// A basis element of a tensor square: an ordered pair of basis elements.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor<B> {
    pub left: B,
    pub right: B,
}

impl<B> Tensor<B> {
    pub fn new(left: B, right: B) -> Self {
        Tensor { left, right }
    }

    /// The pair with the sides exchanged.
    pub fn flip(&self) -> Self
    where
        B: Clone,
    {
        Tensor::new(self.right.clone(), self.left.clone())
    }
}

impl<B: fmt::Display> fmt::Display for Tensor<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {}", self.left, self.right)
    }
}

impl<B: fmt::Display> fmt::Debug for Tensor<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn tensor_json<B>(t: &Tensor<B>, basis_json: impl Fn(&B) -> serde_json::Value) -> serde_json::Value {
    serde_json::json!({ "left": basis_json(&t.left), "right": basis_json(&t.right) })
}

/// Inner product on the tree space: `(t, t') = |SG(t)| delta_{t,t'}`,
/// extended bilinearly.
pub fn inner_tree(x: &LinComb<RootedTree>, y: &LinComb<RootedTree>) -> BigRational {
    let mut acc = BigRational::zero();
    for (t, cx) in x.iter() {
        let cy = y.coeff(t);
        if !cy.is_zero() {
            acc += cx * cy * rat_uint(t.symmetry_order());
        }
    }
    acc
}

/// Inner product on the forest algebra, defined by pairing through the
/// root-attachment bijection: `(u, u) = |SG(B_plus(u))|` for a monomial.
pub fn inner_forest(x: &LinComb<Forest>, y: &LinComb<Forest>) -> BigRational {
    let mut acc = BigRational::zero();
    for (u, cx) in x.iter() {
        let cy = y.coeff(u);
        if !cy.is_zero() {
            let lifted = RootedTree::with_children(u.trees().to_vec());
            acc += cx * cy * rat_uint(lifted.symmetry_order());
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> RootedTree {
        RootedTree::parse(s).unwrap()
    }

    fn single(s: &str) -> LinComb<RootedTree> {
        LinComb::unit(t(s))
    }

    #[test]
    fn zero_purging_and_equality() {
        let mut x = LinComb::unit(t("[]"));
        x.add_term(t("[]"), rat_int(-1));
        assert!(x.is_zero());
        assert_eq!(x, LinComb::zero());

        let a = LinComb::from_terms([(t("[]"), rat_int(2)), (t("[[]]"), rat_int(1))]);
        let b = LinComb::from_terms([(t("[[]]"), rat_int(1)), (t("[]"), rat_int(2))]);
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn linear_extension() {
        let f = |b: &RootedTree| LinComb::term(RootedTree::with_children(vec![b.clone()]), rat_int(3));
        let zero: LinComb<RootedTree> = LinComb::zero();
        assert!(zero.apply_linear(f).is_zero());

        let x = LinComb::from_terms([(t("[]"), rat_int(2)), (t("[[]]"), rat_int(-1))]);
        let id = x.apply_linear(|b| LinComb::unit(b.clone()));
        assert_eq!(id, x);

        let y = x.apply_linear(f);
        assert_eq!(y.coeff(&t("[[]]")), rat_int(6));
        assert_eq!(y.coeff(&t("[[[]]]")), rat_int(-3));
    }

    #[test]
    fn display_forms() {
        let x = LinComb::from_terms([
            (t("[]"), rat_int(1)),
            (t("[[]]"), rat_int(-2)),
            (t("[[][]]"), BigRational::new(BigInt::from(1), BigInt::from(2))),
        ]);
        assert_eq!(x.to_string(), "[] + 1/2*[[][]] - 2*[[]]");
        assert_eq!(LinComb::<RootedTree>::zero().to_string(), "0");
    }

    #[test]
    fn inner_tree_examples() {
        assert_eq!(inner_tree(&single("[]"), &single("[]")), rat_int(1));
        assert_eq!(inner_tree(&single("[[][]]"), &single("[[][]]")), rat_int(2));
        assert_eq!(inner_tree(&single("[[][]]"), &single("[[[]]]")), rat_int(0));
    }

    #[test]
    fn inner_forest_examples() {
        let one = LinComb::unit(Forest::empty());
        assert_eq!(inner_forest(&one, &one), rat_int(1));
        let pair = LinComb::unit(Forest::parse("[] []").unwrap());
        assert_eq!(inner_forest(&pair, &pair), rat_int(2));
        let dot = LinComb::unit(Forest::parse("[]").unwrap());
        let edge = LinComb::unit(Forest::parse("[[]]").unwrap());
        assert_eq!(inner_forest(&dot, &edge), rat_int(0));
    }

    #[test]
    fn json_shape() {
        let x = LinComb::from_terms([(t("[[]]"), BigRational::new(BigInt::from(-1), BigInt::from(2)))]);
        let v = x.to_json(|b| b.to_json());
        assert_eq!(v.to_string(), r#"[{"basis":[[]],"coeff":"-1/2"}]"#);
    }
}
