//! Characters, the convolution monoid, the universal morphism into the
//! quasishuffle bialgebra, the polynomial target, the Hoffman isomorphism
//! with its inverse and scalings, and the right action of characters on
//! morphisms.

use std::rc::Rc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::host::{delta_tilde_iter, expand_first_leg, Host};
use crate::lincomb::{expand_product, LinComb, Tensor2, TensorN};
use crate::poly::{hilbert_poly, Polynomial};
use crate::quasishuffle::{quasishuffle_lc, QShContext};
use crate::scalar::{factorial, Scalar};
use crate::vspec::{VElem, VSpec};
use crate::word::Word;

/// A linear functional on a host with value 1 on the unit term.
/// Multiplicativity is checkable, never assumed (see [`is_character`]).
pub struct Character<H: Host> {
    name: String,
    host: Rc<H>,
    f: Rc<dyn Fn(&H::Term) -> Result<Scalar>>,
}

impl<H: Host> Clone for Character<H> {
    fn clone(&self) -> Self {
        Character {
            name: self.name.clone(),
            host: Rc::clone(&self.host),
            f: Rc::clone(&self.f),
        }
    }
}

impl<H: Host> Character<H> {
    pub fn new(
        host: &Rc<H>,
        name: impl Into<String>,
        f: impl Fn(&H::Term) -> Result<Scalar> + 'static,
    ) -> Self {
        Character {
            name: name.into(),
            host: Rc::clone(host),
            f: Rc::new(f),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn host(&self) -> &Rc<H> {
        &self.host
    }

    pub fn eval(&self, t: &H::Term) -> Result<Scalar> {
        (self.f)(t)
    }

    pub fn eval_lc(&self, x: &LinComb<H::Term>) -> Result<Scalar> {
        x.try_fold_scalar(|t| self.eval(t))
    }

    /// ε_δ, the unit of the convolution monoid.
    pub fn eps_delta(host: &Rc<H>) -> Self {
        let h = Rc::clone(host);
        Character::new(host, "eps_delta", move |t| h.eps_delta(t))
    }

    /// ε_Δ, the projection onto the unit coefficient — also a character.
    pub fn eps_coproduct(host: &Rc<H>) -> Self {
        let h = Rc::clone(host);
        Character::new(host, "eps_coproduct", move |t| Ok(h.counit(t)))
    }

    /// A character read from a finite table keyed by the canonical term
    /// rendering; unlisted terms evaluate to 0, the unit always to 1.
    pub fn from_table(
        host: &Rc<H>,
        name: impl Into<String>,
        table: std::collections::BTreeMap<String, Scalar>,
    ) -> Result<Self> {
        let unit_key = host.unit().to_string();
        if let Some(v) = table.get(&unit_key) {
            if !v.is_one() {
                return Err(Error::InvalidInput(format!(
                    "a character must send the unit `{unit_key}` to 1"
                )));
            }
        }
        let h = Rc::clone(host);
        Ok(Character::new(host, name, move |t| {
            if *t == h.unit() {
                return Ok(Scalar::one());
            }
            Ok(table.get(&t.to_string()).cloned().unwrap_or_else(Scalar::zero))
        }))
    }
}

/// Convolution `λ⋆μ = (λ⊗μ)∘δ` in the character monoid of `(B, ⧺, δ)`.
pub fn char_convolution<H: Host>(a: &Character<H>, b: &Character<H>) -> Result<Character<H>> {
    if !Rc::ptr_eq(&a.host, &b.host) {
        return Err(Error::HostMismatch);
    }
    let host = Rc::clone(&a.host);
    let (fa, fb) = (a.clone(), b.clone());
    let name = format!("({} ⋆ {})", a.name, b.name);
    Ok(Character::new(&host.clone(), name, move |t| {
        let mut acc = Scalar::zero();
        for (Tensor2(x, y), c) in host.delta(t)?.iter() {
            acc += c.clone() * fa.eval(x)? * fb.eval(y)?;
        }
        Ok(acc)
    }))
}

#[derive(Debug, Clone)]
pub struct CharWitness {
    pub lhs_inputs: String,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

#[derive(Debug, Clone, Default)]
pub struct CharReport {
    pub checked_pairs: usize,
    pub failures: Vec<CharWitness>,
}

impl CharReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `λ(1) = 1` and `λ(xy) = λ(x)λ(y)` on the sampled pairs.
pub fn is_character<H: Host>(
    lambda: &Character<H>,
    pairs: &[(H::Term, H::Term)],
) -> Result<CharReport> {
    let mut report = CharReport::default();
    let unit = lambda.host.unit();
    if !lambda.eval(&unit)?.is_one() {
        report.failures.push(CharWitness {
            lhs_inputs: unit.to_string(),
            lhs: lambda.eval(&unit)?,
            rhs: Scalar::one(),
        });
    }
    for (x, y) in pairs {
        report.checked_pairs += 1;
        let lhs = lambda.eval_lc(&lambda.host.product(x, y)?)?;
        let rhs = lambda.eval(x)? * lambda.eval(y)?;
        if lhs != rhs {
            report.failures.push(CharWitness {
                lhs_inputs: format!("x={x}, y={y}"),
                lhs,
                rhs,
            });
        }
    }
    Ok(report)
}

/// `(λ⊗Id)∘ρ` on one counit-kernel term, landing in the base span.
fn lambda_rho<H: Host>(host: &H, lambda: &Character<H>, t: &H::Term) -> Result<VElem> {
    let mut out = VElem::zero();
    for (Tensor2(b, v), c) in host.coaction(t)?.iter() {
        if v.is_unit() {
            return Err(Error::InvalidInput(format!(
                "coaction of `{t}` leaves the base span"
            )));
        }
        out.insert(v.clone(), c.clone() * lambda.eval(b)?);
    }
    Ok(out)
}

/// The universal morphism into the quasishuffle bialgebra evaluated on one
/// term: `φ(1) = []` and on the counit kernel the finite series
/// `φ(x) = Σ_n ((λ⊗Id)∘ρ)^{⊗n} ∘ Δ̃^{(n-1)}(x)`, truncated at the host's
/// connectivity bound. Fails if the bound does not actually kill the tail.
pub fn universal_morphism<H: Host>(
    host: &H,
    lambda: &Character<H>,
    t: &H::Term,
) -> Result<LinComb<Word>> {
    if *t == host.unit() {
        return Ok(LinComb::term(Word::empty()));
    }
    if !host.counit(t).is_zero() {
        return Err(Error::InvalidInput(format!(
            "`{t}` is neither the unit nor a counit-kernel term"
        )));
    }
    let bound = host.bound(t);
    let mut out = LinComb::zero();
    let mut layer: LinComb<TensorN<H::Term>> = LinComb::term(TensorN(vec![t.clone()]));
    for _ in 1..=bound {
        for (TensorN(legs), c) in layer.iter() {
            let images: Vec<VElem> = legs
                .iter()
                .map(|leg| lambda_rho(host, lambda, leg))
                .collect::<Result<_>>()?;
            for (letters, c2) in expand_product(&images).iter() {
                out.insert(
                    Word::new(letters.clone()).expect("base letters"),
                    c.clone() * c2.clone(),
                );
            }
        }
        layer = expand_first_leg(host, &layer)?;
    }
    if !layer.is_zero() {
        return Err(Error::Termination { bound });
    }
    Ok(out)
}

/// The polynomial-valued universal morphism
/// `φ(x) = Σ_n λ^{⊗n} ∘ Δ̃^{(n-1)}(x) · H_n(X)`, with `φ(1) = 1`.
pub fn poly_universal_morphism<H: Host>(
    host: &H,
    lambda: &Character<H>,
    t: &H::Term,
) -> Result<Polynomial> {
    if *t == host.unit() {
        return Ok(Polynomial::one());
    }
    if !host.counit(t).is_zero() {
        return Err(Error::InvalidInput(format!(
            "`{t}` is neither the unit nor a counit-kernel term"
        )));
    }
    let bound = host.bound(t);
    let mut out = Polynomial::zero();
    let mut layer: LinComb<TensorN<H::Term>> = LinComb::term(TensorN(vec![t.clone()]));
    for n in 1..=bound {
        let mut coeff = Scalar::zero();
        for (TensorN(legs), c) in layer.iter() {
            let mut prod = c.clone();
            for leg in legs {
                prod *= lambda.eval(leg)?;
                if prod.is_zero() {
                    break;
                }
            }
            coeff += prod;
        }
        out = &out + &hilbert_poly(n).scale(&coeff);
        layer = expand_first_leg(host, &layer)?;
    }
    if !layer.is_zero() {
        return Err(Error::Termination { bound });
    }
    Ok(out)
}

/// `Υ_V`: sends a word `v_1…v_n` to `ε_V(v_1)…ε_V(v_n) H_n(X)`, a double
/// bialgebra morphism onto `K[X]`.
pub fn upsilon_to_poly(x: &LinComb<Word>, spec: &VSpec) -> Result<Polynomial> {
    let mut out = Polynomial::zero();
    for (w, c) in x.iter() {
        let mut coeff = c.clone();
        for l in w.letters() {
            coeff *= spec.counit(l)?;
            if coeff.is_zero() {
                break;
            }
        }
        out = &out + &hilbert_poly(w.len()).scale(&coeff);
    }
    Ok(out)
}

fn compositions_of(len: usize) -> Vec<Vec<usize>> {
    // all cut tuples of 0..len gaps, as block ranges
    let mut out = Vec::new();
    if len == 0 {
        return out;
    }
    for mask in 0u64..(1u64 << (len - 1)) {
        let mut blocks = Vec::new();
        let mut start = 0usize;
        for i in 0..len - 1 {
            if mask & (1 << i) != 0 {
                blocks.push(i + 1 - start);
                start = i + 1;
            }
        }
        blocks.push(len - start);
        out.push(blocks);
    }
    out
}

fn block_products(w: &Word, blocks: &[usize], spec: &VSpec) -> Result<Vec<VElem>> {
    let mut letters = Vec::with_capacity(blocks.len());
    let mut at = 0usize;
    for &b in blocks {
        let mut acc = VElem::term(w.letters()[at].clone());
        for i in at + 1..at + b {
            acc = spec.elem_product(&acc, &VElem::term(w.letters()[i].clone()))?;
        }
        letters.push(acc);
        at += b;
    }
    Ok(letters)
}

/// The Hoffman isomorphism from the shuffle to the quasishuffle bialgebra:
/// `Θ(w) = Σ 1/(ℓ(w_1)!…ℓ(w_k)!) |w_1|…|w_k|` over the factorizations of
/// `w` into nonempty consecutive blocks, `|w_i|` the ·-product of a block.
pub fn hoffman_theta(w: &Word, ctx: &QShContext) -> Result<LinComb<Word>> {
    ctx.require_commutative("the Hoffman isomorphism")?;
    if w.is_empty() {
        return Ok(LinComb::term(Word::empty()));
    }
    let spec = ctx.spec();
    let mut out = LinComb::zero();
    for blocks in compositions_of(w.len()) {
        let mut coeff = Scalar::one();
        for &b in &blocks {
            coeff /= factorial(b);
        }
        let letters = block_products(w, &blocks, spec)?;
        for (ls, c) in expand_product(&letters).iter() {
            out.insert(Word::new(ls.clone()).expect("base letters"), coeff.clone() * c.clone());
        }
    }
    Ok(out)
}

/// Inverse of the Hoffman isomorphism:
/// `Θ⁻¹(w) = Σ (-1)^{ℓ(w)+k} / (ℓ(w_1)…ℓ(w_k)) |w_1|…|w_k|`.
pub fn hoffman_theta_inv(w: &Word, ctx: &QShContext) -> Result<LinComb<Word>> {
    ctx.require_commutative("the Hoffman isomorphism")?;
    if w.is_empty() {
        return Ok(LinComb::term(Word::empty()));
    }
    let spec = ctx.spec();
    let mut out = LinComb::zero();
    let n = w.len();
    for blocks in compositions_of(n) {
        let k = blocks.len();
        let mut coeff = if (n + k) % 2 == 0 {
            Scalar::one()
        } else {
            -Scalar::one()
        };
        for &b in &blocks {
            coeff /= Scalar::from_integer(b.into());
        }
        let letters = block_products(w, &blocks, spec)?;
        for (ls, c) in expand_product(&letters).iter() {
            out.insert(Word::new(ls.clone()).expect("base letters"), coeff.clone() * c.clone());
        }
    }
    Ok(out)
}

pub fn hoffman_theta_lc(x: &LinComb<Word>, ctx: &QShContext) -> Result<LinComb<Word>> {
    x.try_map_terms(|w| hoffman_theta(w, ctx))
}

pub fn hoffman_theta_inv_lc(x: &LinComb<Word>, ctx: &QShContext) -> Result<LinComb<Word>> {
    x.try_map_terms(|w| hoffman_theta_inv(w, ctx))
}

/// `Φ^{(μ)}`: scales a word by `μ^length`.
pub fn phi_mu_scaling(w: &Word, mu: &Scalar) -> LinComb<Word> {
    let mut c = Scalar::one();
    for _ in 0..w.len() {
        c *= mu.clone();
    }
    LinComb::with_coeff(w.clone(), c)
}

pub fn phi_mu_scaling_lc(x: &LinComb<Word>, mu: &Scalar) -> LinComb<Word> {
    x.map_terms(|w| phi_mu_scaling(w, mu))
}

/// A lazily evaluated morphism from a host into the quasishuffle
/// bialgebra of the same base.
pub struct MorphismEval<H: Host> {
    name: String,
    host: Rc<H>,
    target: QShContext,
    f: Rc<dyn Fn(&H::Term) -> Result<LinComb<Word>>>,
}

impl<H: Host> Clone for MorphismEval<H> {
    fn clone(&self) -> Self {
        MorphismEval {
            name: self.name.clone(),
            host: Rc::clone(&self.host),
            target: self.target.clone(),
            f: Rc::clone(&self.f),
        }
    }
}

impl<H: Host> MorphismEval<H> {
    pub fn new(
        host: &Rc<H>,
        target: QShContext,
        name: impl Into<String>,
        f: impl Fn(&H::Term) -> Result<LinComb<Word>> + 'static,
    ) -> Self {
        MorphismEval {
            name: name.into(),
            host: Rc::clone(host),
            target,
            f: Rc::new(f),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn host(&self) -> &Rc<H> {
        &self.host
    }

    pub fn target(&self) -> &QShContext {
        &self.target
    }

    pub fn eval(&self, t: &H::Term) -> Result<LinComb<Word>> {
        (self.f)(t)
    }

    pub fn eval_lc(&self, x: &LinComb<H::Term>) -> Result<LinComb<Word>> {
        x.try_map_terms(|t| self.eval(t))
    }

    /// The universal morphism attached to a character.
    pub fn universal(host: &Rc<H>, target: QShContext, lambda: &Character<H>) -> Self {
        let h = Rc::clone(host);
        let l = lambda.clone();
        MorphismEval::new(
            host,
            target,
            format!("phi[{}]", lambda.name()),
            move |t| universal_morphism(h.as_ref(), &l, t),
        )
    }

    /// The unique double-bialgebra morphism `φ₁ = φ_{ε_δ}`.
    pub fn phi1(host: &Rc<H>, target: QShContext) -> Self {
        Self::universal(host, target, &Character::eps_delta(host))
    }
}

/// Right action of the character monoid: `φ↤λ = (φ⊗λ)∘δ`.
pub fn action_sweep<H: Host>(
    phi: &MorphismEval<H>,
    lambda: &Character<H>,
) -> Result<MorphismEval<H>> {
    if !Rc::ptr_eq(&phi.host, lambda.host()) {
        return Err(Error::HostMismatch);
    }
    let host = Rc::clone(&phi.host);
    let (p, l) = (phi.clone(), lambda.clone());
    let name = format!("({} ↤ {})", phi.name, lambda.name());
    Ok(MorphismEval::new(
        &host.clone(),
        phi.target.clone(),
        name,
        move |t| {
            let mut out = LinComb::zero();
            for (Tensor2(x, y), c) in host.delta(t)?.iter() {
                let scale = c.clone() * l.eval(y)?;
                if scale.is_zero() {
                    continue;
                }
                out.add_scaled(&p.eval(x)?, &scale);
            }
            Ok(out)
        },
    ))
}

/// `θ'`: the character induced by a morphism into the quasishuffle,
/// `x ↦ ε_δ(φ(x))`.
pub fn char_of_morphism<H: Host>(phi: &MorphismEval<H>) -> Character<H> {
    let p = phi.clone();
    let ctx = phi.target.clone();
    Character::new(
        &phi.host.clone(),
        format!("eps_delta ∘ {}", phi.name),
        move |t| {
            p.eval(t)?
                .try_fold_scalar(|w| crate::quasishuffle::eps_delta_word(w, &ctx))
        },
    )
}

/// Post-composition with a word-host morphism: `(ψ∘φ)(x) = ψ(φ(x))`.
pub fn compose_word_morphism<H: Host>(
    psi: &MorphismEval<crate::host::WordHost>,
    phi: &MorphismEval<H>,
) -> MorphismEval<H> {
    let (p, q) = (phi.clone(), psi.clone());
    MorphismEval::new(
        &phi.host.clone(),
        psi.target.clone(),
        format!("{} ∘ {}", psi.name, phi.name),
        move |t| q.eval_lc(&p.eval(t)?),
    )
}

/// Extensional equality of two morphisms on a finite term sample.
pub fn morphisms_agree_on<H: Host>(
    a: &MorphismEval<H>,
    b: &MorphismEval<H>,
    sample: &[H::Term],
) -> Result<Option<String>> {
    for t in sample {
        let (x, y) = (a.eval(t)?, b.eval(t)?);
        if x != y {
            return Ok(Some(format!("at {t}: {x} ≠ {y}")));
        }
    }
    Ok(None)
}

/// Truncation-insensitivity witness: re-running the series one layer past
/// the bound adds nothing (the layer is already zero).
pub fn truncation_sound<H: Host>(host: &H, t: &H::Term) -> Result<bool> {
    if *t == host.unit() {
        return Ok(true);
    }
    Ok(delta_tilde_iter(host, t, host.bound(t))?.is_zero())
}

/// The quasishuffle extension of a morphism image, mainly for tests:
/// `u ⊗ v ↦ u ⧺ v`.
pub fn qsh_of_pair(
    pairs: &LinComb<Tensor2<Word, Word>>,
    ctx: &QShContext,
) -> Result<LinComb<Word>> {
    let mut out = LinComb::zero();
    for (Tensor2(a, b), c) in pairs.iter() {
        out.add_scaled(&quasishuffle_lc(
            &LinComb::term(a.clone()),
            &LinComb::term(b.clone()),
            ctx,
        )?, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_word, parse_word_lincomb};
    use crate::host::WordHost;
    use crate::scalar::{frac, int};
    use crate::vspec::{VLabel, VSpec};

    fn nat_host() -> Rc<WordHost> {
        Rc::new(WordHost::new(QShContext::new(VSpec::nat_semigroup())))
    }

    fn words_up_to(host: &WordHost, max_len: usize, letters: &[&str]) -> Vec<Word> {
        let labels: Vec<VLabel> = letters.iter().map(|s| VLabel::tok(*s)).collect();
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for l in &labels {
                    let mut ls = w.letters().to_vec();
                    ls.push(l.clone());
                    next.push(Word::new(ls).unwrap());
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        let _ = host;
        out
    }

    #[test]
    fn convolution_unit_laws() {
        let host = nat_host();
        let eps = Character::eps_delta(&host);
        let lam = Character::eps_coproduct(&host);
        let left = char_convolution(&eps, &lam).unwrap();
        let right = char_convolution(&lam, &eps).unwrap();
        for w in words_up_to(&host, 3, &["1", "2"]) {
            assert_eq!(left.eval(&w).unwrap(), lam.eval(&w).unwrap());
            assert_eq!(right.eval(&w).unwrap(), lam.eval(&w).unwrap());
        }
    }

    #[test]
    fn eps_delta_convolved_with_itself_kills_two_letter_words() {
        let host = nat_host();
        let eps = Character::eps_delta(&host);
        let sq = char_convolution(&eps, &eps).unwrap();
        let w = parse_word("[1,2]", host.spec()).unwrap();
        assert_eq!(sq.eval(&w).unwrap(), int(0));
    }

    #[test]
    fn universal_morphism_is_identity_on_words() {
        let host = nat_host();
        let eps = Character::eps_delta(&host);
        for w in words_up_to(&host, 3, &["1", "2", "3"]) {
            let img = universal_morphism(host.as_ref(), &eps, &w).unwrap();
            assert_eq!(img, LinComb::term(w.clone()), "at {w}");
        }
    }

    #[test]
    fn universal_morphism_on_unit() {
        let host = nat_host();
        let eps = Character::eps_delta(&host);
        assert_eq!(
            universal_morphism(host.as_ref(), &eps, &Word::empty()).unwrap(),
            LinComb::term(Word::empty())
        );
    }

    #[test]
    fn termination_guard_fires_on_a_lying_bound() {
        struct Lying(WordHost);
        impl Host for Lying {
            type Term = Word;
            fn name(&self) -> &str {
                "lying"
            }
            fn spec(&self) -> &VSpec {
                self.0.spec()
            }
            fn qsh_context(&self) -> &QShContext {
                self.0.qsh_context()
            }
            fn unit(&self) -> Word {
                self.0.unit()
            }
            fn product(&self, a: &Word, b: &Word) -> Result<LinComb<Word>> {
                self.0.product(a, b)
            }
            fn coproduct(&self, t: &Word) -> Result<LinComb<Tensor2<Word, Word>>> {
                self.0.coproduct(t)
            }
            fn delta(&self, t: &Word) -> Result<LinComb<Tensor2<Word, Word>>> {
                self.0.delta(t)
            }
            fn coaction(&self, t: &Word) -> Result<LinComb<Tensor2<Word, VLabel>>> {
                self.0.coaction(t)
            }
            fn counit(&self, t: &Word) -> Scalar {
                self.0.counit(t)
            }
            fn eps_delta(&self, t: &Word) -> Result<Scalar> {
                self.0.eps_delta(t)
            }
            fn bound(&self, t: &Word) -> usize {
                t.len().saturating_sub(1)
            }
        }
        let host = Rc::new(Lying(WordHost::new(QShContext::new(VSpec::nat_semigroup()))));
        let eps = Character::new(&host, "eps", {
            let h = Rc::clone(&host);
            move |t: &Word| h.eps_delta(t)
        });
        let w = parse_word("[1,2]", host.spec()).unwrap();
        assert!(matches!(
            universal_morphism(host.as_ref(), &eps, &w),
            Err(Error::Termination { .. })
        ));
    }

    #[test]
    fn upsilon_examples() {
        let spec = VSpec::nat_semigroup();
        assert_eq!(
            upsilon_to_poly(&LinComb::term(Word::empty()), &spec).unwrap(),
            Polynomial::one()
        );
        let w = parse_word("[1,2]", &spec).unwrap();
        assert_eq!(
            upsilon_to_poly(&LinComb::term(w), &spec).unwrap(),
            hilbert_poly(2)
        );
    }

    #[test]
    fn upsilon_is_multiplicative_on_trivial_k() {
        let ctx = QShContext::new(VSpec::trivial_k());
        let spec = ctx.spec().clone();
        let x = parse_word("[e]", &spec).unwrap();
        let prod = crate::quasishuffle::quasishuffle(&x, &x, &ctx).unwrap();
        let lhs = upsilon_to_poly(&prod, &spec).unwrap();
        let ux = upsilon_to_poly(&LinComb::term(x), &spec).unwrap();
        assert_eq!(lhs, &ux * &ux);
        assert_eq!(lhs, &Polynomial::x() * &Polynomial::x());
    }

    #[test]
    fn hoffman_on_short_words() {
        let ctx = QShContext::new(VSpec::free_comm());
        let spec = ctx.spec().clone();
        let a = parse_word("[x]", &spec).unwrap();
        assert_eq!(
            hoffman_theta(&a, &ctx).unwrap(),
            LinComb::term(a.clone())
        );
        assert_eq!(
            hoffman_theta(&Word::empty(), &ctx).unwrap(),
            LinComb::term(Word::empty())
        );
        let ab = parse_word("[x,y]", &spec).unwrap();
        let theta = hoffman_theta(&ab, &ctx).unwrap();
        let want = parse_word_lincomb("[x,y] + 1/2*[x*y]", &spec).unwrap();
        assert_eq!(theta, want);

        let inv = hoffman_theta_inv(&ab, &ctx).unwrap();
        let want_inv = parse_word_lincomb("[x,y] - 1/2*[x*y]", &spec).unwrap();
        assert_eq!(inv, want_inv);
        assert_eq!(
            hoffman_theta_inv(&a, &ctx).unwrap(),
            LinComb::term(a)
        );
    }

    #[test]
    fn hoffman_round_trip_length_four() {
        let ctx = QShContext::new(VSpec::nat_semigroup());
        let host = WordHost::new(ctx.clone());
        for w in words_up_to(&host, 4, &["1", "2"]) {
            let there = hoffman_theta_lc(&hoffman_theta_inv(&w, &ctx).unwrap(), &ctx).unwrap();
            assert_eq!(there, LinComb::term(w.clone()), "Θ∘Θ⁻¹ at {w}");
            let back = hoffman_theta_inv_lc(&hoffman_theta(&w, &ctx).unwrap(), &ctx).unwrap();
            assert_eq!(back, LinComb::term(w.clone()), "Θ⁻¹∘Θ at {w}");
        }
    }

    #[test]
    fn phi_mu_examples() {
        let spec = VSpec::free_comm();
        let ab = parse_word("[x,y]", &spec).unwrap();
        assert_eq!(phi_mu_scaling(&ab, &int(1)), LinComb::term(ab.clone()));
        assert!(phi_mu_scaling(&ab, &int(0)).is_zero());
        assert_eq!(
            phi_mu_scaling(&ab, &int(2)),
            LinComb::with_coeff(ab.clone(), int(4))
        );
        assert_eq!(
            phi_mu_scaling(&Word::empty(), &int(0)),
            LinComb::term(Word::empty())
        );
        let _ = frac(1, 2);
    }

    #[test]
    fn action_unit_and_associativity() {
        let host = nat_host();
        let target = host.qsh_context().clone();
        let phi1 = MorphismEval::phi1(&host, target);
        let eps = Character::eps_delta(&host);
        let sample = words_up_to(&host, 3, &["1", "2"]);

        let acted = action_sweep(&phi1, &eps).unwrap();
        assert!(morphisms_agree_on(&phi1, &acted, &sample).unwrap().is_none());

        let lam = Character::eps_coproduct(&host);
        let mu = Character::eps_delta(&host);
        let step = action_sweep(&action_sweep(&phi1, &lam).unwrap(), &mu).unwrap();
        let joined = action_sweep(&phi1, &char_convolution(&lam, &mu).unwrap()).unwrap();
        assert!(morphisms_agree_on(&step, &joined, &sample).unwrap().is_none());
    }

    #[test]
    fn theta_round_trip_on_characters() {
        let host = nat_host();
        let target = host.qsh_context().clone();
        let phi1 = MorphismEval::phi1(&host, target);
        let lam = Character::eps_coproduct(&host);
        let theta_lam = action_sweep(&phi1, &lam).unwrap();
        let back = char_of_morphism(&theta_lam);
        for w in words_up_to(&host, 3, &["1", "2"]) {
            assert_eq!(back.eval(&w).unwrap(), lam.eval(&w).unwrap(), "at {w}");
        }
    }

    #[test]
    fn char_of_identity_is_eps_delta() {
        let host = nat_host();
        let target = host.qsh_context().clone();
        let host2 = Rc::clone(&host);
        let ident = MorphismEval::new(&host, target, "id", move |t| {
            let _ = &host2;
            Ok(LinComb::term(t.clone()))
        });
        let chr = char_of_morphism(&ident);
        let eps = Character::eps_delta(&host);
        for w in words_up_to(&host, 2, &["1", "2"]) {
            assert_eq!(chr.eval(&w).unwrap(), eps.eval(&w).unwrap());
        }
    }

    #[test]
    fn is_character_detects_violation() {
        let host = nat_host();
        let eps = Character::eps_delta(&host);
        let w1 = parse_word("[1]", host.spec()).unwrap();
        let w2 = parse_word("[2]", host.spec()).unwrap();
        let pairs = vec![(w1.clone(), w1.clone()), (w1.clone(), w2.clone())];
        assert!(is_character(&eps, &pairs).unwrap().pass());
        assert!(is_character(&eps, &[]).unwrap().pass());

        let bogus = Character::new(&host, "bogus", |t: &Word| {
            Ok(if t.is_empty() { int(1) } else { int(2) })
        });
        let report = is_character(&bogus, &pairs).unwrap();
        assert!(!report.pass());
        assert!(!report.failures.is_empty());
    }

    #[test]
    fn convolution_rejects_host_mismatch() {
        let h1 = nat_host();
        let h2 = nat_host();
        let a = Character::eps_delta(&h1);
        let b = Character::eps_delta(&h2);
        assert!(matches!(char_convolution(&a, &b), Err(Error::HostMismatch)));
    }
}
