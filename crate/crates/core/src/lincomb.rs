//! Sparse formal linear combinations with exact rational coefficients.
//!
//! `LinComb<T>` is the value type of every operation in the kernel: words,
//! tensors, decorated graphs and base-bialgebra elements are all summed
//! here. Zero coefficients are never stored and iteration follows the
//! canonical order of `T`, so equality and printing are deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::error::Result;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinComb<T: Ord> {
    terms: BTreeMap<T, Scalar>,
}

impl<T: Ord> Default for LinComb<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Ord> LinComb<T> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&T, &Scalar)> {
        self.terms.iter()
    }

    pub fn terms(&self) -> impl Iterator<Item = &T> {
        self.terms.keys()
    }
}

impl<T: Ord + Clone> LinComb<T> {
    pub fn term(t: T) -> Self {
        Self::with_coeff(t, Scalar::from_integer(1.into()))
    }

    pub fn with_coeff(t: T, c: Scalar) -> Self {
        let mut lc = Self::zero();
        lc.insert(t, c);
        lc
    }

    /// Adds `c * t`, collapsing equal terms and dropping zeros.
    pub fn insert(&mut self, t: T, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(t);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn coeff(&self, t: &T) -> Scalar {
        self.terms.get(t).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (t, c) in other.iter() {
            self.insert(t.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &Scalar) {
        if factor.is_zero() {
            return;
        }
        for (t, c) in other.iter() {
            self.insert(t.clone(), c.clone() * factor.clone());
        }
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, factor);
        out
    }

    /// Linear extension of a term-level map.
    pub fn map_terms<U: Ord + Clone>(&self, f: impl Fn(&T) -> LinComb<U>) -> LinComb<U> {
        let mut out = LinComb::zero();
        for (t, c) in self.iter() {
            out.add_scaled(&f(t), c);
        }
        out
    }

    /// Fallible variant of [`map_terms`](Self::map_terms).
    pub fn try_map_terms<U: Ord + Clone>(
        &self,
        mut f: impl FnMut(&T) -> Result<LinComb<U>>,
    ) -> Result<LinComb<U>> {
        let mut out = LinComb::zero();
        for (t, c) in self.iter() {
            out.add_scaled(&f(t)?, c);
        }
        Ok(out)
    }

    /// Applies a scalar-valued functional linearly.
    pub fn try_fold_scalar(&self, mut f: impl FnMut(&T) -> Result<Scalar>) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for (t, c) in self.iter() {
            acc += f(t)? * c.clone();
        }
        Ok(acc)
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (T, Scalar)>) -> Self {
        let mut lc = Self::zero();
        for (t, c) in iter {
            lc.insert(t, c);
        }
        lc
    }
}

/// Free-function spelling of the linear extension, matching the math usage.
pub fn linear_extend<T: Ord + Clone, U: Ord + Clone>(
    f: impl Fn(&T) -> LinComb<U>,
    x: &LinComb<T>,
) -> LinComb<U> {
    x.map_terms(f)
}

/// Bilinear tensor expansion.
pub fn lc_tensor<S: Ord + Clone, T: Ord + Clone>(
    a: &LinComb<S>,
    b: &LinComb<T>,
) -> LinComb<Tensor2<S, T>> {
    let mut out = LinComb::zero();
    for (s, cs) in a.iter() {
        for (t, ct) in b.iter() {
            out.insert(Tensor2(s.clone(), t.clone()), cs.clone() * ct.clone());
        }
    }
    out
}

/// Multiplies out a product of sums: `(Σ…)(Σ…)…(Σ…) → Σ c · (t_1,…,t_k)`.
pub fn expand_product<T: Ord + Clone>(factors: &[LinComb<T>]) -> LinComb<Vec<T>> {
    let mut acc: LinComb<Vec<T>> = LinComb::term(Vec::new());
    for f in factors {
        let mut next = LinComb::zero();
        for (prefix, cp) in acc.iter() {
            for (t, ct) in f.iter() {
                let mut v = prefix.clone();
                v.push(t.clone());
                next.insert(v, cp.clone() * ct.clone());
            }
        }
        acc = next;
    }
    acc
}

impl<T: Ord + Clone> Add for &LinComb<T> {
    type Output = LinComb<T>;
    fn add(self, rhs: Self) -> LinComb<T> {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl<T: Ord + Clone> Sub for &LinComb<T> {
    type Output = LinComb<T>;
    fn sub(self, rhs: Self) -> LinComb<T> {
        let mut out = self.clone();
        for (t, c) in rhs.iter() {
            out.insert(t.clone(), -c.clone());
        }
        out
    }
}

impl<T: Ord + Clone> Neg for &LinComb<T> {
    type Output = LinComb<T>;
    fn neg(self) -> LinComb<T> {
        let mut out = LinComb::zero();
        for (t, c) in self.iter() {
            out.insert(t.clone(), -c.clone());
        }
        out
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, term: &impl fmt::Display, mag: &Scalar) -> fmt::Result {
    if mag == &Scalar::from_integer(1.into()) {
        write!(f, "{term}")
    } else {
        write!(f, "{mag}*{term}")
    }
}

impl<T: Ord + fmt::Display> fmt::Display for LinComb<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            let neg = c < &Scalar::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            fmt_term(f, t, &mag)?;
        }
        Ok(())
    }
}

/// Two tensor legs; the derived order is lexicographic by legs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tensor2<A, B>(pub A, pub B);

/// Three tensor legs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tensor3<A, B, C>(pub A, pub B, pub C);

/// Homogeneous tensor of arbitrary arity (all terms of one `LinComb`
/// share the arity).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TensorN<T>(pub Vec<T>);

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Tensor2<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {}", self.0, self.1)
    }
}

impl<A: fmt::Display, B: fmt::Display, C: fmt::Display> fmt::Display for Tensor3<A, B, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {} ⊗ {}", self.0, self.1, self.2)
    }
}

impl<T: fmt::Display> fmt::Display for TensorN<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, leg) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊗ ")?;
            }
            write!(f, "{leg}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn add_cancels() {
        let a = &LinComb::term("a") + &LinComb::term("b");
        let sum = &a + &LinComb::with_coeff("b", int(-1));
        assert_eq!(sum, LinComb::term("a"));
    }

    #[test]
    fn add_zero_is_identity() {
        let x = LinComb::with_coeff("a", frac(3, 2));
        assert_eq!(&x + &LinComb::zero(), x);
    }

    #[test]
    fn halves_collapse() {
        let h = LinComb::with_coeff("a", frac(1, 2));
        assert_eq!(&h + &h, LinComb::term("a"));
    }

    #[test]
    fn tensor_distributes_on_example() {
        let ab = &LinComb::term("a") + &LinComb::term("b");
        let c = LinComb::term("c");
        let lhs = lc_tensor(&ab, &c);
        let rhs = &lc_tensor(&LinComb::term("a"), &c) + &lc_tensor(&LinComb::term("b"), &c);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_with_zero() {
        let z: LinComb<&str> = LinComb::zero();
        assert!(lc_tensor(&z, &LinComb::term("x")).is_zero());
    }

    #[test]
    fn tensor_scales() {
        let a = LinComb::with_coeff("a", int(2));
        let b = LinComb::with_coeff("b", int(3));
        assert_eq!(
            lc_tensor(&a, &b),
            LinComb::with_coeff(Tensor2("a", "b"), int(6))
        );
    }

    #[test]
    fn linear_extend_identity_and_zero() {
        let x = &LinComb::with_coeff("a", int(2)) + &LinComb::term("b");
        assert_eq!(linear_extend(|t| LinComb::term(*t), &x), x);
        assert!(linear_extend(|_| LinComb::<&str>::zero(), &x).is_zero());
    }

    #[test]
    fn linear_extend_example() {
        // f(e1) = [e1]+[e2] applied to 2*e1
        let x = LinComb::with_coeff("e1", int(2));
        let f = |t: &&str| -> LinComb<&'static str> {
            if *t == "e1" {
                &LinComb::term("e1") + &LinComb::term("e2")
            } else {
                LinComb::term("other")
            }
        };
        let out = linear_extend(f, &x);
        let want = &LinComb::with_coeff("e1", int(2)) + &LinComb::with_coeff("e2", int(2));
        assert_eq!(out, want);
    }

    #[test]
    fn display_format() {
        let mut lc = LinComb::zero();
        lc.insert("a", int(-1));
        lc.insert("b", frac(3, 2));
        assert_eq!(lc.to_string(), "-a + 3/2*b");
        assert_eq!(LinComb::<&str>::zero().to_string(), "0");
    }

    #[test]
    fn expand_product_multiplies_out() {
        let f1 = &LinComb::term("a") + &LinComb::term("b");
        let f2 = LinComb::with_coeff("c", int(2));
        let p = expand_product(&[f1, f2]);
        assert_eq!(p.coeff(&vec!["a", "c"]), int(2));
        assert_eq!(p.coeff(&vec!["b", "c"]), int(2));
        assert_eq!(p.num_terms(), 2);
    }
}
