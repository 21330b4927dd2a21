//! The quasishuffle double bialgebra on words: products ⧺ and ⧢, the
//! deconcatenation coproduct Δ, the contraction–extraction coproduct δ,
//! its counit ε_δ, the coaction ρ into `uV`, iterated reduced coproducts
//! and the antipode.

use std::rc::Rc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lincomb::{expand_product, LinComb, Tensor2, TensorN};
use crate::scalar::Scalar;
use crate::vspec::{VElem, VLabel, VSpec};
use crate::word::Word;

/// Evaluation context: the base bialgebra. δ and ρ refuse to run unless
/// the commutative and cocommutative flags are set; ⧺ needs commutative.
#[derive(Clone)]
pub struct QShContext {
    spec: Rc<VSpec>,
}

impl QShContext {
    pub fn new(spec: VSpec) -> Self {
        QShContext {
            spec: Rc::new(spec),
        }
    }

    pub fn spec(&self) -> &VSpec {
        &self.spec
    }

    pub fn require_commutative(&self, op: &'static str) -> Result<()> {
        if self.spec.is_commutative() {
            Ok(())
        } else {
            Err(Error::MissingFlag {
                op,
                flag: "commutative",
                spec: self.spec.name().to_string(),
            })
        }
    }

    pub fn require_bicommutative(&self, op: &'static str) -> Result<()> {
        self.require_commutative(op)?;
        if self.spec.is_cocommutative() {
            Ok(())
        } else {
            Err(Error::MissingFlag {
                op,
                flag: "cocommutative",
                spec: self.spec.name().to_string(),
            })
        }
    }
}

fn prepend_label(letter: &VLabel, rest: &LinComb<Word>) -> LinComb<Word> {
    rest.map_terms(|w| {
        let mut letters = vec![letter.clone()];
        letters.extend(w.letters().iter().cloned());
        LinComb::term(Word::new(letters).expect("letter validated"))
    })
}

fn prepend_elem(head: &VElem, rest: &LinComb<Word>) -> LinComb<Word> {
    let mut out = LinComb::zero();
    for (l, c) in head.iter() {
        out.add_scaled(&prepend_label(l, rest), c);
    }
    out
}

fn quasishuffle_rec(
    u: &[VLabel],
    v: &[VLabel],
    prod: &dyn Fn(&VLabel, &VLabel) -> Result<VElem>,
) -> Result<LinComb<Word>> {
    if u.is_empty() {
        return Ok(LinComb::term(Word::new(v.to_vec()).expect("validated")));
    }
    if v.is_empty() {
        return Ok(LinComb::term(Word::new(u.to_vec()).expect("validated")));
    }
    let (x, y) = (&u[0], &v[0]);
    let mut out = prepend_label(x, &quasishuffle_rec(&u[1..], v, prod)?);
    out.add_assign(&prepend_label(y, &quasishuffle_rec(u, &v[1..], prod)?));
    out.add_assign(&prepend_elem(
        &prod(x, y)?,
        &quasishuffle_rec(&u[1..], &v[1..], prod)?,
    ));
    Ok(out)
}

/// Quasishuffle product: interleavings plus merges through `·`.
/// Defined by `xv ⧺ yw = x(v⧺yw) + y(xv⧺w) + (x·y)(v⧺w)`.
pub fn quasishuffle(u: &Word, v: &Word, ctx: &QShContext) -> Result<LinComb<Word>> {
    ctx.require_commutative("the quasishuffle product")?;
    quasishuffle_rec(u.letters(), v.letters(), &|a, b| ctx.spec().product(a, b))
}

/// Bilinear extension of ⧺ to combinations.
pub fn quasishuffle_lc(
    u: &LinComb<Word>,
    v: &LinComb<Word>,
    ctx: &QShContext,
) -> Result<LinComb<Word>> {
    let mut out = LinComb::zero();
    for (a, ca) in u.iter() {
        for (b, cb) in v.iter() {
            out.add_scaled(&quasishuffle(a, b, ctx)?, &(ca.clone() * cb.clone()));
        }
    }
    Ok(out)
}

/// Shuffle product: the quasishuffle with the zero product on `V`.
pub fn shuffle(u: &Word, v: &Word) -> LinComb<Word> {
    quasishuffle_rec(u.letters(), v.letters(), &|_, _| Ok(VElem::zero()))
        .expect("zero product cannot fail")
}

pub fn shuffle_lc(u: &LinComb<Word>, v: &LinComb<Word>) -> LinComb<Word> {
    let mut out = LinComb::zero();
    for (a, ca) in u.iter() {
        for (b, cb) in v.iter() {
            out.add_scaled(&shuffle(a, b), &(ca.clone() * cb.clone()));
        }
    }
    out
}

/// Deconcatenation: all prefix ⊗ suffix splittings, `n+1` terms.
pub fn deconcatenate(w: &Word) -> LinComb<Tensor2<Word, Word>> {
    let mut out = LinComb::zero();
    for k in 0..=w.len() {
        out.insert(Tensor2(w.prefix(k), w.suffix(k)), Scalar::one());
    }
    out
}

/// All per-letter Sweedler expansions of a block of letters: the pairs
/// (·-product of first legs, word of second legs).
fn block_sweedler(
    letters: &[VLabel],
    spec: &VSpec,
) -> Result<LinComb<Tensor2<VLabel, Word>>> {
    let mut acc: Option<LinComb<Tensor2<VLabel, Word>>> = None;
    for letter in letters {
        let parts = spec.coproduct(letter)?;
        acc = Some(match acc {
            None => parts.map_terms(|Tensor2(a, b)| {
                LinComb::term(Tensor2(
                    a.clone(),
                    Word::single(b.clone()).expect("letter validated"),
                ))
            }),
            Some(prev) => {
                let mut next = LinComb::zero();
                for (Tensor2(head, tail), c1) in prev.iter() {
                    for (Tensor2(a, b), c2) in parts.iter() {
                        let prod = spec.product(head, a)?;
                        let grown = tail.concat(
                            &Word::single(b.clone()).expect("letter validated"),
                        );
                        for (l, cp) in prod.iter() {
                            next.insert(
                                Tensor2(l.clone(), grown.clone()),
                                c1.clone() * c2.clone() * cp.clone(),
                            );
                        }
                    }
                }
                next
            }
        });
    }
    Ok(acc.expect("nonempty block"))
}

/// Contraction–extraction coproduct δ on a word: sum over all cut sets
/// (the empty cut set included) of the word of per-block ·-products of
/// first Sweedler legs tensored with the quasishuffle of the blocks of
/// second legs.
pub fn delta_word(w: &Word, ctx: &QShContext) -> Result<LinComb<Tensor2<Word, Word>>> {
    ctx.require_bicommutative("the coproduct δ on words")?;
    let n = w.len();
    if n == 0 {
        return Ok(LinComb::term(Tensor2(Word::empty(), Word::empty())));
    }
    let spec = ctx.spec();
    let mut out = LinComb::zero();
    // cut masks over positions 1..n-1; bit i set = cut after letter i+1
    for mask in 0u64..(1u64 << (n - 1)) {
        let mut blocks: Vec<(usize, usize)> = Vec::new();
        let mut start = 0usize;
        for i in 0..n - 1 {
            if mask & (1 << i) != 0 {
                blocks.push((start, i + 1));
                start = i + 1;
            }
        }
        blocks.push((start, n));

        let per_block: Vec<LinComb<Tensor2<VLabel, Word>>> = blocks
            .iter()
            .map(|&(a, b)| block_sweedler(&w.letters()[a..b], spec))
            .collect::<Result<_>>()?;
        let combined = expand_product(&per_block);
        for (choice, c) in combined.iter() {
            let first = Word::new(choice.iter().map(|t| t.0.clone()).collect())
                .expect("letters validated");
            let mut second = LinComb::term(Word::empty());
            for t in choice {
                second = quasishuffle_lc(&second, &LinComb::term(t.1.clone()), ctx)?;
            }
            for (sw, cs) in second.iter() {
                out.insert(
                    Tensor2(first.clone(), sw.clone()),
                    c.clone() * cs.clone(),
                );
            }
        }
    }
    Ok(out)
}

/// ε_δ: ε_V on single letters, 1 on the empty word, 0 in length ≥ 2.
pub fn eps_delta_word(w: &Word, ctx: &QShContext) -> Result<Scalar> {
    match w.len() {
        0 => Ok(Scalar::one()),
        1 => ctx.spec().counit(&w.letters()[0]),
        _ => Ok(Scalar::zero()),
    }
}

/// Coaction ρ: primes every letter, multiplies the second legs in `uV`.
/// `ρ([]) = [] ⊗ 1_uV`; on nonempty words the second leg stays in `V`.
pub fn coaction_word(w: &Word, ctx: &QShContext) -> Result<LinComb<Tensor2<Word, VLabel>>> {
    ctx.require_bicommutative("the coaction ρ on words")?;
    if w.is_empty() {
        return Ok(LinComb::term(Tensor2(Word::empty(), VLabel::Unit)));
    }
    let spec = ctx.spec();
    let mut out = LinComb::zero();
    let per_letter: Vec<LinComb<Tensor2<VLabel, VLabel>>> = w
        .letters()
        .iter()
        .map(|l| spec.coproduct(l))
        .collect::<Result<_>>()?;
    let combined = expand_product(&per_letter);
    for (choice, c) in combined.iter() {
        let first = Word::new(choice.iter().map(|t| t.0.clone()).collect())
            .expect("letters validated");
        let mut second = VElem::term(choice[0].1.clone());
        for t in &choice[1..] {
            second = spec.elem_product(&second, &VElem::term(t.1.clone()))?;
        }
        for (l, cs) in second.iter() {
            out.insert(Tensor2(first.clone(), l.clone()), c.clone() * cs.clone());
        }
    }
    Ok(out)
}

/// Iterated reduced coproduct on a nonempty word: all cuts into `n+1`
/// nonempty consecutive blocks; zero once `n+1` exceeds the length.
pub fn reduced_coproduct_iter(w: &Word, n: usize) -> Result<LinComb<TensorN<Word>>> {
    if w.is_empty() {
        return Err(Error::EmptyWordReduced);
    }
    let len = w.len();
    if n + 1 > len {
        return Ok(LinComb::zero());
    }
    let mut out = LinComb::zero();
    // choose n cut positions among len-1 gaps
    let mut cuts: Vec<usize> = (1..=n).collect();
    loop {
        let mut legs = Vec::with_capacity(n + 1);
        let mut start = 0;
        for &c in &cuts {
            legs.push(w.slice(start..c));
            start = c;
        }
        legs.push(w.slice(start..len));
        out.insert(TensorN(legs), Scalar::one());

        // next combination of cut positions in 1..len
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if cuts[i] < len - (n - i) {
                cuts[i] += 1;
                for j in i + 1..n {
                    cuts[j] = cuts[j - 1] + 1;
                }
                break;
            }
        }
        if n == 0 {
            return Ok(out);
        }
    }
}

/// Recursive antipode of the connected bialgebra `(T(V), ⧺, Δ)`:
/// `S([]) = []`, `S(w) = -w - Σ S(w⁽¹⁾) ⧺ w⁽²⁾` over the reduced coproduct.
pub fn antipode_word(w: &Word, ctx: &QShContext) -> Result<LinComb<Word>> {
    if w.is_empty() {
        return Ok(LinComb::term(Word::empty()));
    }
    let mut out = LinComb::with_coeff(w.clone(), -Scalar::one());
    for k in 1..w.len() {
        let left = antipode_word(&w.prefix(k), ctx)?;
        let right = LinComb::term(w.suffix(k));
        out.add_scaled(&quasishuffle_lc(&left, &right, ctx)?, &-Scalar::one());
    }
    Ok(out)
}

pub fn antipode_lc(w: &LinComb<Word>, ctx: &QShContext) -> Result<LinComb<Word>> {
    w.try_map_terms(|t| antipode_word(t, ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_word_lincomb;
    use crate::scalar::int;

    fn free_ctx() -> QShContext {
        QShContext::new(VSpec::free_comm())
    }

    fn nat_ctx() -> QShContext {
        QShContext::new(VSpec::nat_semigroup())
    }

    fn w(ctx: &QShContext, s: &str) -> Word {
        crate::expr::parse_word(s, ctx.spec()).unwrap()
    }

    fn lc(ctx: &QShContext, s: &str) -> LinComb<Word> {
        parse_word_lincomb(s, ctx.spec()).unwrap()
    }

    #[test]
    fn single_letters() {
        let ctx = free_ctx();
        let got = quasishuffle(&w(&ctx, "[x]"), &w(&ctx, "[y]"), &ctx).unwrap();
        assert_eq!(got, lc(&ctx, "[x,y] + [y,x] + [x*y]"));
    }

    #[test]
    fn two_against_one() {
        let ctx = free_ctx();
        let got = quasishuffle(&w(&ctx, "[x,y]"), &w(&ctx, "[z]"), &ctx).unwrap();
        assert_eq!(
            got,
            lc(&ctx, "[x,y,z] + [x,z,y] + [z,x,y] + [x*z,y] + [x,y*z]")
        );
    }

    #[test]
    fn empty_is_neutral() {
        let ctx = free_ctx();
        let word = w(&ctx, "[x,y,z]");
        assert_eq!(
            quasishuffle(&Word::empty(), &word, &ctx).unwrap(),
            LinComb::term(word.clone())
        );
        assert_eq!(
            quasishuffle(&word, &Word::empty(), &ctx).unwrap(),
            LinComb::term(word)
        );
    }

    #[test]
    fn nat_ones_merge() {
        let ctx = nat_ctx();
        let got = quasishuffle(&w(&ctx, "[1]"), &w(&ctx, "[1]"), &ctx).unwrap();
        assert_eq!(got, lc(&ctx, "2*[1,1] + [2]"));
    }

    #[test]
    fn two_against_two_has_thirteen_terms() {
        let ctx = free_ctx();
        let got = quasishuffle(&w(&ctx, "[x,y]"), &w(&ctx, "[z,t]"), &ctx).unwrap();
        assert_eq!(got.num_terms(), 13);
        // the two terms beyond the eleven-term printed expansion
        assert_eq!(got.coeff(&w(&ctx, "[x,y*z,t]")), int(1));
        assert_eq!(got.coeff(&w(&ctx, "[z,x*t,y]")), int(1));
    }

    #[test]
    fn shuffle_drops_merges() {
        let ctx = free_ctx();
        assert_eq!(
            shuffle(&w(&ctx, "[x]"), &w(&ctx, "[y]")),
            lc(&ctx, "[x,y] + [y,x]")
        );
        assert_eq!(
            shuffle(&w(&ctx, "[x,y]"), &w(&ctx, "[z]")),
            lc(&ctx, "[x,y,z] + [x,z,y] + [z,x,y]")
        );
        let word = w(&ctx, "[x,y]");
        assert_eq!(shuffle(&Word::empty(), &word), LinComb::term(word));
    }

    #[test]
    fn shuffle_counts_are_binomial() {
        let ctx = free_ctx();
        let got = shuffle(&w(&ctx, "[x,y]"), &w(&ctx, "[z,t]"));
        assert_eq!(got.num_terms(), 6); // C(4,2)
    }

    #[test]
    fn deconcatenate_examples() {
        let ctx = free_ctx();
        let got = deconcatenate(&w(&ctx, "[a,b]"));
        assert_eq!(got.num_terms(), 3);
        assert_eq!(
            got.coeff(&Tensor2(Word::empty(), w(&ctx, "[a,b]"))),
            int(1)
        );
        assert_eq!(got.coeff(&Tensor2(w(&ctx, "[a]"), w(&ctx, "[b]"))), int(1));
        assert_eq!(
            got.coeff(&Tensor2(w(&ctx, "[a,b]"), Word::empty())),
            int(1)
        );
        assert_eq!(
            deconcatenate(&Word::empty()),
            LinComb::term(Tensor2(Word::empty(), Word::empty()))
        );
        assert_eq!(deconcatenate(&w(&ctx, "[a]")).num_terms(), 2);
    }

    #[test]
    fn delta_single_letter_group_like() {
        let ctx = nat_ctx();
        let got = delta_word(&w(&ctx, "[3]"), &ctx).unwrap();
        assert_eq!(
            got,
            LinComb::term(Tensor2(w(&ctx, "[3]"), w(&ctx, "[3]")))
        );
    }

    #[test]
    fn delta_two_letters() {
        // δ([m,n]) = [m+n]⊗[m,n] + [m,n]⊗([m,n]+[n,m]+[m+n]) with m=1, n=2
        let ctx = nat_ctx();
        let got = delta_word(&w(&ctx, "[1,2]"), &ctx).unwrap();
        let mut want = LinComb::zero();
        want.insert(Tensor2(w(&ctx, "[3]"), w(&ctx, "[1,2]")), int(1));
        want.insert(Tensor2(w(&ctx, "[1,2]"), w(&ctx, "[1,2]")), int(1));
        want.insert(Tensor2(w(&ctx, "[1,2]"), w(&ctx, "[2,1]")), int(1));
        want.insert(Tensor2(w(&ctx, "[1,2]"), w(&ctx, "[3]")), int(1));
        assert_eq!(got, want);
    }

    #[test]
    fn delta_empty_word() {
        let ctx = nat_ctx();
        assert_eq!(
            delta_word(&Word::empty(), &ctx).unwrap(),
            LinComb::term(Tensor2(Word::empty(), Word::empty()))
        );
    }

    #[test]
    fn delta_refuses_without_flags() {
        let json = r#"{"name":"nc","basis":["a"],"product":{"a,a":{"a":"1"}},
            "coproduct":{"a":{"a,a":"1"}},"counit":{"a":"1"}}"#;
        let ctx = QShContext::new(VSpec::from_json(json).unwrap());
        let word = Word::single(VLabel::tok("a")).unwrap();
        assert!(matches!(
            delta_word(&word, &ctx),
            Err(Error::MissingFlag { .. })
        ));
        assert!(quasishuffle(&word, &word, &ctx).is_err());
    }

    #[test]
    fn eps_delta_rules() {
        let ctx = nat_ctx();
        assert_eq!(eps_delta_word(&w(&ctx, "[3]"), &ctx).unwrap(), int(1));
        assert_eq!(eps_delta_word(&w(&ctx, "[1,2]"), &ctx).unwrap(), int(0));
        assert_eq!(eps_delta_word(&Word::empty(), &ctx).unwrap(), int(1));
    }

    #[test]
    fn coaction_examples() {
        let ctx = nat_ctx();
        let got = coaction_word(&w(&ctx, "[1,2]"), &ctx).unwrap();
        assert_eq!(
            got,
            LinComb::term(Tensor2(w(&ctx, "[1,2]"), VLabel::tok("3")))
        );
        assert_eq!(
            coaction_word(&Word::empty(), &ctx).unwrap(),
            LinComb::term(Tensor2(Word::empty(), VLabel::Unit))
        );
        let triv = QShContext::new(VSpec::trivial_k());
        let got = coaction_word(&w(&triv, "[e,e]"), &triv).unwrap();
        assert_eq!(
            got,
            LinComb::term(Tensor2(w(&triv, "[e,e]"), VLabel::tok("e")))
        );
    }

    #[test]
    fn reduced_iter_examples() {
        let ctx = free_ctx();
        let ab = w(&ctx, "[a,b]");
        assert_eq!(
            reduced_coproduct_iter(&ab, 0).unwrap(),
            LinComb::term(TensorN(vec![ab.clone()]))
        );
        assert_eq!(
            reduced_coproduct_iter(&ab, 1).unwrap(),
            LinComb::term(TensorN(vec![w(&ctx, "[a]"), w(&ctx, "[b]")]))
        );
        assert!(reduced_coproduct_iter(&ab, 2).unwrap().is_zero());
        assert!(matches!(
            reduced_coproduct_iter(&Word::empty(), 0),
            Err(Error::EmptyWordReduced)
        ));
    }

    #[test]
    fn antipode_examples() {
        let free = free_ctx();
        let a = w(&free, "[a]");
        assert_eq!(
            antipode_word(&a, &free).unwrap(),
            LinComb::with_coeff(a.clone(), int(-1))
        );
        assert_eq!(
            antipode_word(&Word::empty(), &free).unwrap(),
            LinComb::term(Word::empty())
        );
        let nat = nat_ctx();
        let got = antipode_word(&w(&nat, "[1,1]"), &nat).unwrap();
        assert_eq!(got, lc(&nat, "[1,1] + [2]"));
    }

    // independent oracle: the quasishuffle via surjection enumeration
    fn qsh_surjections(u: &Word, v: &Word, spec: &VSpec) -> LinComb<Word> {
        let k = u.len();
        let l = v.len();
        let all: Vec<VLabel> = u
            .letters()
            .iter()
            .chain(v.letters().iter())
            .cloned()
            .collect();
        let mut out = LinComb::zero();
        let total = k + l;
        if total == 0 {
            return LinComb::term(Word::empty());
        }
        // enumerate all functions [total] -> [total], keep (k,l)-quasishuffles
        let mut stack = vec![Vec::<usize>::new()];
        while let Some(partial) = stack.pop() {
            if partial.len() == total {
                let m = *partial.iter().max().unwrap();
                if (1..=m).any(|c| !partial.contains(&c)) {
                    continue; // not surjective onto [max]
                }
                if !(1..k).all(|i| partial[i - 1] < partial[i]) {
                    continue;
                }
                if !(k + 1..total).all(|i| partial[i - 1] < partial[i]) {
                    continue;
                }
                // product the fibers
                let mut letters: Vec<VElem> = Vec::new();
                let mut ok = true;
                for c in 1..=m {
                    let fiber: Vec<usize> =
                        (0..total).filter(|&i| partial[i] == c).collect();
                    let mut acc = VElem::term(all[fiber[0]].clone());
                    for &i in &fiber[1..] {
                        match spec.elem_product(&acc, &VElem::term(all[i].clone())) {
                            Ok(p) => acc = p,
                            Err(_) => {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if !ok {
                        break;
                    }
                    letters.push(acc);
                }
                if ok {
                    let combined = expand_product(&letters);
                    for (ls, c) in combined.iter() {
                        out.insert(Word::new(ls.clone()).unwrap(), c.clone());
                    }
                }
                continue;
            }
            for next in 1..=total {
                let mut p = partial.clone();
                p.push(next);
                stack.push(p);
            }
        }
        out
    }

    #[test]
    fn recursion_matches_surjection_oracle() {
        let free = free_ctx();
        let cases = [
            ("[x]", "[y]"),
            ("[x,y]", "[z]"),
            ("[x,y]", "[z,t]"),
            ("[x,y,z]", "[t,a]"),
        ];
        for (a, b) in cases {
            let u = w(&free, a);
            let v = w(&free, b);
            assert_eq!(
                quasishuffle(&u, &v, &free).unwrap(),
                qsh_surjections(&u, &v, free.spec()),
                "{a} ⧺ {b}"
            );
        }
        let nat = nat_ctx();
        let u = w(&nat, "[1,2]");
        let v = w(&nat, "[1,1]");
        assert_eq!(
            quasishuffle(&u, &v, &nat).unwrap(),
            qsh_surjections(&u, &v, nat.spec())
        );
    }
}
