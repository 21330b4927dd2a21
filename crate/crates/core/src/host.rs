//! The host-bialgebra interface consumed by the morphism engine, and the
//! word host over a quasishuffle context.
//!
//! A host bundles one connected bialgebra: unit, product, both coproducts,
//! the coaction into `uV`, both counits, and a connectivity bound — the
//! least `N` with `Δ̃^{(N)}(x) = 0` — which makes the universal-morphism
//! series a finite sum.

use std::fmt::{Debug, Display};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lincomb::{LinComb, Tensor2, TensorN};
use crate::quasishuffle::{
    coaction_word, delta_word, deconcatenate, eps_delta_word, quasishuffle, QShContext,
};
use crate::scalar::Scalar;
use crate::vspec::{VLabel, VSpec};
use crate::word::Word;

pub trait Host: 'static {
    type Term: Clone + Ord + Display + Debug + 'static;

    fn name(&self) -> &str;
    fn spec(&self) -> &VSpec;
    fn qsh_context(&self) -> &QShContext;
    fn unit(&self) -> Self::Term;
    fn product(&self, a: &Self::Term, b: &Self::Term) -> Result<LinComb<Self::Term>>;
    fn coproduct(&self, t: &Self::Term) -> Result<LinComb<Tensor2<Self::Term, Self::Term>>>;
    fn delta(&self, t: &Self::Term) -> Result<LinComb<Tensor2<Self::Term, Self::Term>>>;
    fn coaction(&self, t: &Self::Term) -> Result<LinComb<Tensor2<Self::Term, VLabel>>>;
    fn counit(&self, t: &Self::Term) -> Scalar;
    fn eps_delta(&self, t: &Self::Term) -> Result<Scalar>;
    /// Least `N` with `Δ̃^{(N)}(t) = 0`.
    fn bound(&self, t: &Self::Term) -> usize;
}

/// `Δ̃(t) = Δ(t) - t⊗1 - 1⊗t` on a counit-kernel basis term.
pub fn delta_tilde<H: Host>(
    host: &H,
    t: &H::Term,
) -> Result<LinComb<Tensor2<H::Term, H::Term>>> {
    if !host.counit(t).is_zero() {
        return Err(Error::InvalidInput(format!(
            "`{t}` is not in the counit kernel"
        )));
    }
    let mut out = host.coproduct(t)?;
    out.insert(Tensor2(t.clone(), host.unit()), -Scalar::one());
    out.insert(Tensor2(host.unit(), t.clone()), -Scalar::one());
    Ok(out)
}

/// Iterated reduced coproduct `Δ̃^{(n)}`, a combination of `n+1`-leg
/// tensors. `Δ̃^{(0)}` is the identity.
pub fn delta_tilde_iter<H: Host>(
    host: &H,
    t: &H::Term,
    n: usize,
) -> Result<LinComb<TensorN<H::Term>>> {
    let mut layer: LinComb<TensorN<H::Term>> = LinComb::term(TensorN(vec![t.clone()]));
    if !host.counit(t).is_zero() {
        return Err(Error::InvalidInput(format!(
            "`{t}` is not in the counit kernel"
        )));
    }
    for _ in 0..n {
        layer = expand_first_leg(host, &layer)?;
    }
    Ok(layer)
}

/// One application of `Δ̃` to the first leg of every tensor.
pub fn expand_first_leg<H: Host>(
    host: &H,
    layer: &LinComb<TensorN<H::Term>>,
) -> Result<LinComb<TensorN<H::Term>>> {
    let mut next = LinComb::zero();
    for (TensorN(legs), c) in layer.iter() {
        let expanded = delta_tilde(host, &legs[0])?;
        for (Tensor2(a, b), c2) in expanded.iter() {
            let mut new_legs = Vec::with_capacity(legs.len() + 1);
            new_legs.push(a.clone());
            new_legs.push(b.clone());
            new_legs.extend(legs[1..].iter().cloned());
            next.insert(TensorN(new_legs), c.clone() * c2.clone());
        }
    }
    Ok(next)
}

/// The quasishuffle bialgebra on words as a host over its own base.
pub struct WordHost {
    ctx: QShContext,
}

impl WordHost {
    pub fn new(ctx: QShContext) -> Self {
        WordHost { ctx }
    }
}

impl Host for WordHost {
    type Term = Word;

    fn name(&self) -> &str {
        "words"
    }

    fn spec(&self) -> &VSpec {
        self.ctx.spec()
    }

    fn qsh_context(&self) -> &QShContext {
        &self.ctx
    }

    fn unit(&self) -> Word {
        Word::empty()
    }

    fn product(&self, a: &Word, b: &Word) -> Result<LinComb<Word>> {
        quasishuffle(a, b, &self.ctx)
    }

    fn coproduct(&self, t: &Word) -> Result<LinComb<Tensor2<Word, Word>>> {
        Ok(deconcatenate(t))
    }

    fn delta(&self, t: &Word) -> Result<LinComb<Tensor2<Word, Word>>> {
        delta_word(t, &self.ctx)
    }

    fn coaction(&self, t: &Word) -> Result<LinComb<Tensor2<Word, VLabel>>> {
        coaction_word(t, &self.ctx)
    }

    fn counit(&self, t: &Word) -> Scalar {
        if t.is_empty() {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    fn eps_delta(&self, t: &Word) -> Result<Scalar> {
        eps_delta_word(t, &self.ctx)
    }

    fn bound(&self, t: &Word) -> usize {
        t.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_word;
    use crate::quasishuffle::reduced_coproduct_iter;

    fn host() -> WordHost {
        WordHost::new(QShContext::new(VSpec::free_comm()))
    }

    #[test]
    fn generic_iter_matches_word_level_cuts() {
        let h = host();
        for text in ["[x]", "[x,y]", "[x,y,z]", "[x,y,z,t]"] {
            let w = parse_word(text, h.spec()).unwrap();
            for n in 0..=w.len() {
                let generic = delta_tilde_iter(&h, &w, n).unwrap();
                let direct = reduced_coproduct_iter(&w, n).unwrap();
                assert_eq!(generic, direct, "{text}, n={n}");
            }
        }
    }

    #[test]
    fn bound_kills_the_tail() {
        let h = host();
        let w = parse_word("[x,y,z]", h.spec()).unwrap();
        assert!(delta_tilde_iter(&h, &w, h.bound(&w)).unwrap().is_zero());
        assert!(!delta_tilde_iter(&h, &w, h.bound(&w) - 1)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn delta_tilde_rejects_unit() {
        let h = host();
        assert!(delta_tilde(&h, &Word::empty()).is_err());
    }
}
