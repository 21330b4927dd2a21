//! Brute-force verification of every structural identity on small
//! enumerated instances: the base-bialgebra axioms, the word laws, the
//! morphism-engine laws and the decorated-graph laws. Sampling beyond the
//! exhaustive bounds is seed-deterministic, so identical configurations
//! produce byte-identical reports.

use std::collections::BTreeSet;
use std::rc::Rc;

use num_traits::One;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{
    chromatic_deletion_contraction, chromatic_polynomial, count_proper_colorings,
    enumerate_graphs, graph_coaction, graph_coproduct, graph_delta, graph_eps_delta, phi1_graph,
    DecoratedGraph, GraphHost,
};
use crate::host::{delta_tilde_iter, Host, WordHost};
use crate::lincomb::{LinComb, Tensor2, Tensor3};
use crate::morphism::{
    action_sweep, char_convolution, char_of_morphism, compose_word_morphism, hoffman_theta,
    hoffman_theta_inv, hoffman_theta_inv_lc, hoffman_theta_lc, is_character, morphisms_agree_on,
    universal_morphism, upsilon_to_poly, Character, MorphismEval,
};
use crate::poly::{hilbert_poly, Polynomial};
use crate::quasishuffle::{
    antipode_lc, antipode_word, coaction_word, deconcatenate, delta_word, eps_delta_word,
    quasishuffle, quasishuffle_lc, shuffle, QShContext,
};
use crate::scalar::{frac, Scalar};
use crate::vspec::{check_v_axioms, VElem, VLabel, VSpec};
use crate::word::Word;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub spec: VSpec,
    pub seed: u64,
    pub max_word_len: usize,
    pub max_vertices: usize,
    pub trilinear_max_vertices: usize,
}

impl RunConfig {
    pub fn new(spec: VSpec) -> Self {
        RunConfig {
            spec,
            seed: 0,
            max_word_len: 4,
            max_vertices: 4,
            trilinear_max_vertices: 3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckEntry {
    pub law: String,
    pub statement: String,
    pub sample: String,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub spec_name: String,
    pub seed: u64,
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> usize {
        self.entries.iter().filter(|e| !e.pass).count()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("spec: {}  (seed {})\n", self.spec_name, self.seed));
        for e in &self.entries {
            let status = if e.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status}  {}  [{}]\n", e.law, e.sample));
            if let Some(w) = &e.witness {
                out.push_str(&format!("      law: {}\n      witness: {w}\n", e.statement));
            }
        }
        out.push_str(&format!(
            "summary: {} passed, {} failed\n",
            self.entries.len() - self.failures(),
            self.failures()
        ));
        out
    }

    pub fn render_json(&self) -> serde_json::Value {
        serde_json::json!({
            "spec": self.spec_name,
            "seed": self.seed,
            "entries": self.entries.iter().map(|e| serde_json::json!({
                "law": e.law,
                "statement": e.statement,
                "sample": e.sample,
                "pass": e.pass,
                "witness": e.witness,
            })).collect::<Vec<_>>(),
            "passed": self.entries.len() - self.failures(),
            "failed": self.failures(),
        })
    }
}

struct Suite {
    report: CheckReport,
}

impl Suite {
    fn law(
        &mut self,
        law: &str,
        statement: &str,
        sample: &str,
        f: impl FnOnce() -> Result<Option<String>>,
    ) {
        let witness = match f() {
            Ok(w) => w,
            Err(e) => Some(format!("operation failed: {e}")),
        };
        self.report.entries.push(CheckEntry {
            law: law.to_string(),
            statement: statement.to_string(),
            sample: sample.to_string(),
            pass: witness.is_none(),
            witness,
        });
    }
}

pub fn words_up_to(letters: &[VLabel], max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in letters {
                let mut ls = w.letters().to_vec();
                ls.push(l.clone());
                next.push(Word::new(ls).expect("letters"));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn word_pairs(letters: &[VLabel], max_total: usize) -> Vec<(Word, Word)> {
    let all = words_up_to(letters, max_total);
    let mut out = Vec::new();
    for u in &all {
        for v in &all {
            if u.len() + v.len() <= max_total {
                out.push((u.clone(), v.clone()));
            }
        }
    }
    out
}

fn fnv64(seed: u64, text: &str) -> u64 {
    let mut h = 0xcbf29ce484222325u64 ^ seed.wrapping_mul(0x9e3779b97f4a7c15);
    for b in text.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// A seeded linear functional on words with value 1 on the empty word.
/// Not multiplicative in general; used for the laws that only need
/// `λ(1) = 1`.
pub fn seeded_word_functional(host: &Rc<WordHost>, seed: u64) -> Character<WordHost> {
    Character::new(host, format!("functional[{seed}]"), move |w: &Word| {
        if w.is_empty() {
            return Ok(Scalar::one());
        }
        let code = fnv64(seed, &w.to_string());
        Ok(frac((code % 5) as i64 - 2, ((code >> 8) % 2 + 1) as i64))
    })
}

/// A multiplicative character of the graph host: seeded values on
/// connected graphs, extended by the product over components.
pub fn seeded_component_character(host: &Rc<GraphHost>, seed: u64) -> Character<GraphHost> {
    Character::new(host, format!("character[{seed}]"), move |g: &DecoratedGraph| {
        let mut acc = Scalar::one();
        for comp in g.components() {
            let sub: BTreeSet<usize> = comp.into_iter().collect();
            let piece = g.restrict(&sub)?;
            let code = fnv64(seed, &piece.to_string());
            acc *= frac((code % 7) as i64 - 3, ((code >> 8) % 2 + 1) as i64);
        }
        Ok(acc)
    })
}

/// Seeded random graph on `n` vertices, decorated by one fixed letter.
pub fn seeded_graph(rng: &mut ChaCha8Rng, n: usize, letter: &VLabel) -> DecoratedGraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.next_u32() & 1 == 1 {
                edges.push((a, b));
            }
        }
    }
    DecoratedGraph::new(vec![letter.clone(); n], edges, n.max(1)).expect("within bound")
}

fn first_mismatch<T: Ord + std::fmt::Display + Clone>(
    input: &dyn std::fmt::Display,
    lhs: &LinComb<T>,
    rhs: &LinComb<T>,
) -> Option<String> {
    if lhs == rhs {
        None
    } else {
        Some(format!("input {input}: lhs = {lhs} ; rhs = {rhs}"))
    }
}

type WT3 = LinComb<Tensor3<Word, Word, Word>>;

fn word_laws(suite: &mut Suite, cfg: &RunConfig, ctx: &QShContext) -> Result<()> {
    let spec = ctx.spec();
    let letters3 = spec.sample_labels(3);
    let letters2 = spec.sample_labels(2);
    let words3 = words_up_to(&letters3, cfg.max_word_len);
    let words2 = words_up_to(&letters2, cfg.max_word_len);
    let sample3 = format!("words ≤ {} over {} letters", cfg.max_word_len, letters3.len());
    let sample2 = format!("words ≤ {} over {} letters", cfg.max_word_len, letters2.len());

    suite.law(
        "deconcatenation coassociativity",
        "(Δ⊗Id)∘Δ = (Id⊗Δ)∘Δ",
        &sample3,
        || {
            for w in &words3 {
                let d = deconcatenate(w);
                let mut lhs: WT3 = LinComb::zero();
                let mut rhs: WT3 = LinComb::zero();
                for (Tensor2(a, b), c) in d.iter() {
                    for (Tensor2(x, y), c2) in deconcatenate(a).iter() {
                        lhs.insert(
                            Tensor3(x.clone(), y.clone(), b.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                    for (Tensor2(x, y), c2) in deconcatenate(b).iter() {
                        rhs.insert(
                            Tensor3(a.clone(), x.clone(), y.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                }
                if let Some(w2) = first_mismatch(w, &lhs, &rhs) {
                    return Ok(Some(w2));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "deconcatenation counit laws",
        "(ε_Δ⊗Id)∘Δ = Id = (Id⊗ε_Δ)∘Δ",
        &sample3,
        || {
            for w in &words3 {
                let d = deconcatenate(w);
                let mut left = LinComb::zero();
                let mut right = LinComb::zero();
                for (Tensor2(a, b), c) in d.iter() {
                    if a.is_empty() {
                        left.insert(b.clone(), c.clone());
                    }
                    if b.is_empty() {
                        right.insert(a.clone(), c.clone());
                    }
                }
                let want = LinComb::term(w.clone());
                if left != want || right != want {
                    return Ok(Some(format!("input {w}: left {left}, right {right}")));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "δ coassociativity (words)",
        "(δ⊗Id)∘δ = (Id⊗δ)∘δ",
        &sample2,
        || {
            for w in &words2 {
                let d = delta_word(w, ctx)?;
                let mut lhs: WT3 = LinComb::zero();
                let mut rhs: WT3 = LinComb::zero();
                for (Tensor2(a, b), c) in d.iter() {
                    for (Tensor2(x, y), c2) in delta_word(a, ctx)?.iter() {
                        lhs.insert(
                            Tensor3(x.clone(), y.clone(), b.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                    for (Tensor2(x, y), c2) in delta_word(b, ctx)?.iter() {
                        rhs.insert(
                            Tensor3(a.clone(), x.clone(), y.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                }
                if let Some(w2) = first_mismatch(w, &lhs, &rhs) {
                    return Ok(Some(w2));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "δ counit laws (words)",
        "(ε_δ⊗Id)∘δ = Id = (Id⊗ε_δ)∘δ",
        &sample3,
        || {
            for w in &words3 {
                let d = delta_word(w, ctx)?;
                let mut left = LinComb::zero();
                let mut right = LinComb::zero();
                for (Tensor2(a, b), c) in d.iter() {
                    left.insert(b.clone(), c.clone() * eps_delta_word(a, ctx)?);
                    right.insert(a.clone(), c.clone() * eps_delta_word(b, ctx)?);
                }
                let want = LinComb::term(w.clone());
                if left != want || right != want {
                    return Ok(Some(format!("input {w}: left {left}, right {right}")));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "quasishuffle/Δ bialgebra law",
        "Δ(u⧺v) = Δ(u)⧺Δ(v)",
        &format!("pairs with |u|+|v| ≤ {}", cfg.max_word_len + 1),
        || {
            for (u, v) in word_pairs(&letters3, cfg.max_word_len + 1) {
                let prod = quasishuffle(&u, &v, ctx)?;
                let mut lhs = LinComb::zero();
                for (w, c) in prod.iter() {
                    lhs.add_scaled(&deconcatenate(w), c);
                }
                let mut rhs = LinComb::zero();
                for (Tensor2(a1, b1), c1) in deconcatenate(&u).iter() {
                    for (Tensor2(a2, b2), c2) in deconcatenate(&v).iter() {
                        let first = quasishuffle(a1, a2, ctx)?;
                        let second = quasishuffle(b1, b2, ctx)?;
                        for (x, cx) in first.iter() {
                            for (y, cy) in second.iter() {
                                rhs.insert(
                                    Tensor2(x.clone(), y.clone()),
                                    c1.clone() * c2.clone() * cx.clone() * cy.clone(),
                                );
                            }
                        }
                    }
                }
                if let Some(w2) = first_mismatch(&format!("{u} ⧺ {v}"), &lhs, &rhs) {
                    return Ok(Some(w2));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "quasishuffle/δ multiplicativity",
        "δ(u⧺v) = δ(u)·δ(v) (componentwise ⧺)",
        &format!("pairs with |u|+|v| ≤ {} over 2 letters", cfg.max_word_len),
        || {
            for (u, v) in word_pairs(&letters2, cfg.max_word_len) {
                let prod = quasishuffle(&u, &v, ctx)?;
                let mut lhs = LinComb::zero();
                for (w, c) in prod.iter() {
                    lhs.add_scaled(&delta_word(w, ctx)?, c);
                }
                let mut rhs = LinComb::zero();
                for (Tensor2(a1, b1), c1) in delta_word(&u, ctx)?.iter() {
                    for (Tensor2(a2, b2), c2) in delta_word(&v, ctx)?.iter() {
                        let first = quasishuffle(a1, a2, ctx)?;
                        let second = quasishuffle(b1, b2, ctx)?;
                        for (x, cx) in first.iter() {
                            for (y, cy) in second.iter() {
                                rhs.insert(
                                    Tensor2(x.clone(), y.clone()),
                                    c1.clone() * c2.clone() * cx.clone() * cy.clone(),
                                );
                            }
                        }
                    }
                }
                if let Some(w2) = first_mismatch(&format!("{u} ⧺ {v}"), &lhs, &rhs) {
                    return Ok(Some(w2));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "cointeraction (words)",
        "(Δ⊗Id)∘δ = ⧺_{1,3,24}∘(δ⊗δ)∘Δ",
        &sample2,
        || {
            for w in &words2 {
                let mut lhs: WT3 = LinComb::zero();
                for (Tensor2(a, b), c) in delta_word(w, ctx)?.iter() {
                    for (Tensor2(x, y), c2) in deconcatenate(a).iter() {
                        lhs.insert(
                            Tensor3(x.clone(), y.clone(), b.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                }
                let mut rhs: WT3 = LinComb::zero();
                for (Tensor2(p, q), c) in deconcatenate(w).iter() {
                    for (Tensor2(p1, p2), c1) in delta_word(p, ctx)?.iter() {
                        for (Tensor2(q1, q2), c2) in delta_word(q, ctx)?.iter() {
                            let third = quasishuffle(p2, q2, ctx)?;
                            for (t, ct) in third.iter() {
                                rhs.insert(
                                    Tensor3(p1.clone(), q1.clone(), t.clone()),
                                    c.clone() * c1.clone() * c2.clone() * ct.clone(),
                                );
                            }
                        }
                    }
                }
                if let Some(w2) = first_mismatch(w, &lhs, &rhs) {
                    return Ok(Some(w2));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "coaction is coassociative (words)",
        "(ρ⊗Id)∘ρ = (Id⊗δ_uV)∘ρ",
        &sample3,
        || {
            for w in &words3 {
                let r = coaction_word(w, ctx)?;
                let mut lhs = LinComb::zero();
                let mut rhs = LinComb::zero();
                for (Tensor2(a, v), c) in r.iter() {
                    for (Tensor2(x, u), c2) in coaction_word(a, ctx)?.iter() {
                        lhs.insert(
                            Tensor3(x.clone(), u.clone(), v.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                    for (Tensor2(v1, v2), c2) in spec.uv_coproduct(v)?.iter() {
                        rhs.insert(
                            Tensor3(a.clone(), v1.clone(), v2.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                }
                if let Some(w2) = first_mismatch(w, &lhs, &rhs) {
                    return Ok(Some(w2));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "coaction counit law (words)",
        "(Id⊗ε_uV)∘ρ = Id",
        &sample3,
        || {
            for w in &words3 {
                let mut back = LinComb::zero();
                for (Tensor2(a, v), c) in coaction_word(w, ctx)?.iter() {
                    back.insert(a.clone(), c.clone() * spec.uv_counit(v)?);
                }
                if back != LinComb::term(w.clone()) {
                    return Ok(Some(format!("input {w}: got {back}")));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "coaction is an algebra morphism (words)",
        "ρ∘⧺ = (⧺⊗·)∘(Id⊗c⊗Id)∘(ρ⊗ρ)",
        &format!("pairs with |u|+|v| ≤ {}", cfg.max_word_len),
        || {
            for (u, v) in word_pairs(&letters3, cfg.max_word_len) {
                let mut lhs = LinComb::zero();
                for (w, c) in quasishuffle(&u, &v, ctx)?.iter() {
                    lhs.add_scaled(&coaction_word(w, ctx)?, c);
                }
                let mut rhs = LinComb::zero();
                for (Tensor2(a, x), c1) in coaction_word(&u, ctx)?.iter() {
                    for (Tensor2(b, y), c2) in coaction_word(&v, ctx)?.iter() {
                        let first = quasishuffle(a, b, ctx)?;
                        let second = spec.uv_product(x, y)?;
                        for (fw, cf) in first.iter() {
                            for (sl, cs) in second.iter() {
                                rhs.insert(
                                    Tensor2(fw.clone(), sl.clone()),
                                    c1.clone() * c2.clone() * cf.clone() * cs.clone(),
                                );
                            }
                        }
                    }
                }
                if let Some(w2) = first_mismatch(&format!("{u} ⧺ {v}"), &lhs, &rhs) {
                    return Ok(Some(w2));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "coaction counit compatibility (words)",
        "(ε_Δ⊗Id)∘ρ(x) = ε_Δ(x)·1_uV",
        &sample3,
        || {
            for w in &words3 {
                let mut lhs: VElem = LinComb::zero();
                for (Tensor2(a, v), c) in coaction_word(w, ctx)?.iter() {
                    if a.is_empty() {
                        lhs.insert(v.clone(), c.clone());
                    }
                }
                let mut rhs: VElem = LinComb::zero();
                if w.is_empty() {
                    rhs.insert(VLabel::Unit, Scalar::one());
                }
                if let Some(w2) = first_mismatch(w, &lhs, &rhs) {
                    return Ok(Some(w2));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "coaction coproduct compatibility (words)",
        "(Δ⊗Id)∘ρ = m_{1,3,24}∘(ρ⊗ρ)∘Δ",
        &sample3,
        || {
            for w in &words3 {
                let mut lhs = LinComb::zero();
                for (Tensor2(a, v), c) in coaction_word(w, ctx)?.iter() {
                    for (Tensor2(x, y), c2) in deconcatenate(a).iter() {
                        lhs.insert(
                            Tensor3(x.clone(), y.clone(), v.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                }
                let mut rhs = LinComb::zero();
                for (Tensor2(p, q), c) in deconcatenate(w).iter() {
                    for (Tensor2(p0, p1), c1) in coaction_word(p, ctx)?.iter() {
                        for (Tensor2(q0, q1), c2) in coaction_word(q, ctx)?.iter() {
                            for (l, cl) in spec.uv_product(p1, q1)?.iter() {
                                rhs.insert(
                                    Tensor3(p0.clone(), q0.clone(), l.clone()),
                                    c.clone() * c1.clone() * c2.clone() * cl.clone(),
                                );
                            }
                        }
                    }
                }
                if let Some(w2) = first_mismatch(w, &lhs, &rhs) {
                    return Ok(Some(w2));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "double compatibility (words)",
        "(Id⊗c)∘(ρ⊗Id)∘δ = (δ⊗Id)∘ρ",
        &sample2,
        || {
            for w in &words2 {
                let mut lhs = LinComb::zero();
                for (Tensor2(x1, x2), c) in delta_word(w, ctx)?.iter() {
                    for (Tensor2(x10, x11), c2) in coaction_word(x1, ctx)?.iter() {
                        lhs.insert(
                            Tensor3(x10.clone(), x2.clone(), x11.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                }
                let mut rhs = LinComb::zero();
                for (Tensor2(x0, x1), c) in coaction_word(w, ctx)?.iter() {
                    for (Tensor2(a, b), c2) in delta_word(x0, ctx)?.iter() {
                        rhs.insert(
                            Tensor3(a.clone(), b.clone(), x1.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                }
                if let Some(w2) = first_mismatch(w, &lhs, &rhs) {
                    return Ok(Some(w2));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "antipode laws (words)",
        "⧺(S⊗Id)Δ = ⧺(Id⊗S)Δ = ηε_Δ",
        &sample3,
        || {
            for w in &words3 {
                let mut left = LinComb::zero();
                let mut right = LinComb::zero();
                for (Tensor2(a, b), c) in deconcatenate(w).iter() {
                    left.add_scaled(
                        &quasishuffle_lc(&antipode_word(a, ctx)?, &LinComb::term(b.clone()), ctx)?,
                        c,
                    );
                    right.add_scaled(
                        &quasishuffle_lc(&LinComb::term(a.clone()), &antipode_word(b, ctx)?, ctx)?,
                        c,
                    );
                }
                let want = if w.is_empty() {
                    LinComb::term(Word::empty())
                } else {
                    LinComb::zero()
                };
                if left != want || right != want {
                    return Ok(Some(format!("input {w}: left {left}, right {right}")));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "antipode comodule law (words)",
        "ρ∘S = (S⊗Id)∘ρ",
        &sample3,
        || {
            for w in &words3 {
                let mut lhs = LinComb::zero();
                for (s, c) in antipode_word(w, ctx)?.iter() {
                    lhs.add_scaled(&coaction_word(s, ctx)?, c);
                }
                let mut rhs = LinComb::zero();
                for (Tensor2(a, v), c) in coaction_word(w, ctx)?.iter() {
                    for (s, c2) in antipode_word(a, ctx)?.iter() {
                        rhs.insert(Tensor2(s.clone(), v.clone()), c.clone() * c2.clone());
                    }
                }
                if let Some(w2) = first_mismatch(w, &lhs, &rhs) {
                    return Ok(Some(w2));
                }
            }
            Ok(None)
        },
    );

    Ok(())
}

fn delannoy(k: usize, l: usize) -> u64 {
    let mut table = vec![vec![0u64; l + 1]; k + 1];
    for (i, row) in table.iter_mut().enumerate() {
        for j in 0..row.len() {
            row[j] = if i == 0 || j == 0 { 1 } else { 0 };
        }
    }
    for i in 1..=k {
        for j in 1..=l {
            table[i][j] = table[i - 1][j] + table[i][j - 1] + table[i - 1][j - 1];
        }
    }
    table[k][l]
}

fn term_count_law(suite: &mut Suite, ctx: &QShContext) {
    let letters = ctx.spec().sample_labels(8);
    suite.law(
        "quasishuffle term-count law",
        "#terms(u⧺v) = f(k,l), f(k,l) = f(k-1,l)+f(k,l-1)+f(k-1,l-1)",
        "generic distinct letters, k+l ≤ 6",
        || {
            for k in 0..=6usize {
                for l in 0..=(6 - k) {
                    if k + l > letters.len() {
                        continue;
                    }
                    let u = Word::new(letters[..k].to_vec()).expect("letters");
                    let v = Word::new(letters[k..k + l].to_vec()).expect("letters");
                    let got = quasishuffle(&u, &v, ctx)?.num_terms() as u64;
                    let want = delannoy(k, l);
                    if got != want {
                        return Ok(Some(format!(
                            "k={k}, l={l}: {u} ⧺ {v} has {got} terms, recursion gives {want}"
                        )));
                    }
                }
            }
            Ok(None)
        },
    );
}

fn morphism_laws(suite: &mut Suite, cfg: &RunConfig, ctx: &QShContext) -> Result<()> {
    let host = Rc::new(WordHost::new(ctx.clone()));
    let letters3 = ctx.spec().sample_labels(3);
    let words3 = words_up_to(&letters3, cfg.max_word_len);
    let short_words = words_up_to(&letters3, cfg.max_word_len.saturating_sub(1));
    let sample3 = format!("words ≤ {} over {} letters", cfg.max_word_len, letters3.len());

    suite.law(
        "truncation soundness (word host)",
        "Δ̃^{(n)}(x) = 0 for n ≥ bound(x)",
        &sample3,
        || {
            for w in &words3 {
                if w.is_empty() {
                    continue;
                }
                let layer = delta_tilde_iter(host.as_ref(), w, host.bound(w))?;
                if !layer.is_zero() {
                    return Ok(Some(format!("input {w}: Δ̃^({}) = {layer}", host.bound(w))));
                }
            }
            Ok(None)
        },
    );

    let eps_delta = Character::eps_delta(&host);
    let eps_cop = Character::eps_coproduct(&host);

    for lambda in [&eps_delta, &eps_cop] {
        suite.law(
            &format!("universal morphism laws for λ = {}", lambda.name()),
            "φ(u⧺v) = φ(u)⧺φ(v), Δφ = (φ⊗φ)Δ, ρφ = (φ⊗Id)ρ, ε_δ∘φ = λ",
            &sample3,
            || {
                let phi = |t: &Word| universal_morphism(host.as_ref(), lambda, t);
                for w in &words3 {
                    let img = phi(w)?;
                    // ε_δ ∘ φ = λ
                    let got = img.try_fold_scalar(|x| eps_delta_word(x, ctx))?;
                    if got != lambda.eval(w)? {
                        return Ok(Some(format!("ε_δ(φ({w})) = {got} ≠ λ({w})")));
                    }
                    // Δ ∘ φ = (φ⊗φ) ∘ Δ
                    let mut lhs = LinComb::zero();
                    for (x, c) in img.iter() {
                        lhs.add_scaled(&deconcatenate(x), c);
                    }
                    let mut rhs = LinComb::zero();
                    for (Tensor2(a, b), c) in deconcatenate(w).iter() {
                        for (x, cx) in phi(a)?.iter() {
                            for (y, cy) in phi(b)?.iter() {
                                rhs.insert(
                                    Tensor2(x.clone(), y.clone()),
                                    c.clone() * cx.clone() * cy.clone(),
                                );
                            }
                        }
                    }
                    if let Some(m) = first_mismatch(&format!("Δφ at {w}"), &lhs, &rhs) {
                        return Ok(Some(m));
                    }
                    // ρ ∘ φ = (φ⊗Id) ∘ ρ
                    let mut lhs = LinComb::zero();
                    for (x, c) in img.iter() {
                        lhs.add_scaled(&coaction_word(x, ctx)?, c);
                    }
                    let mut rhs = LinComb::zero();
                    for (Tensor2(a, v), c) in coaction_word(w, ctx)?.iter() {
                        for (x, cx) in phi(a)?.iter() {
                            rhs.insert(Tensor2(x.clone(), v.clone()), c.clone() * cx.clone());
                        }
                    }
                    if let Some(m) = first_mismatch(&format!("ρφ at {w}"), &lhs, &rhs) {
                        return Ok(Some(m));
                    }
                }
                for u in &short_words {
                    for v in &short_words {
                        if u.len() + v.len() > cfg.max_word_len {
                            continue;
                        }
                        let mut lhs = LinComb::zero();
                        for (w, c) in quasishuffle(u, v, ctx)?.iter() {
                            lhs.add_scaled(&phi(w)?, c);
                        }
                        let rhs = quasishuffle_lc(&phi(u)?, &phi(v)?, ctx)?;
                        if let Some(m) =
                            first_mismatch(&format!("φ({u}⧺{v})"), &lhs, &rhs)
                        {
                            return Ok(Some(m));
                        }
                    }
                }
                Ok(None)
            },
        );
    }

    for seed in [1u64, 2] {
        let lambda = seeded_word_functional(&host, cfg.seed ^ seed);
        suite.law(
            &format!("coalgebra laws of the series for {}", lambda.name()),
            "Δφ = (φ⊗φ)Δ, ρφ = (φ⊗Id)ρ, ε_δ∘φ = λ (λ any functional with λ(1)=1)",
            &sample3,
            || {
                let phi = |t: &Word| universal_morphism(host.as_ref(), &lambda, t);
                for w in &words3 {
                    let img = phi(w)?;
                    let got = img.try_fold_scalar(|x| eps_delta_word(x, ctx))?;
                    if got != lambda.eval(w)? {
                        return Ok(Some(format!("ε_δ(φ({w})) = {got} ≠ λ({w})")));
                    }
                    let mut lhs = LinComb::zero();
                    for (x, c) in img.iter() {
                        lhs.add_scaled(&deconcatenate(x), c);
                    }
                    let mut rhs = LinComb::zero();
                    for (Tensor2(a, b), c) in deconcatenate(w).iter() {
                        for (x, cx) in phi(a)?.iter() {
                            for (y, cy) in phi(b)?.iter() {
                                rhs.insert(
                                    Tensor2(x.clone(), y.clone()),
                                    c.clone() * cx.clone() * cy.clone(),
                                );
                            }
                        }
                    }
                    if let Some(m) = first_mismatch(&format!("Δφ at {w}"), &lhs, &rhs) {
                        return Ok(Some(m));
                    }
                }
                Ok(None)
            },
        );
    }

    suite.law(
        "double-morphism law for φ₁ (word host)",
        "δ∘φ₁ = (φ₁⊗φ₁)∘δ",
        &format!("words ≤ {} over 2 letters", cfg.max_word_len),
        || {
            let letters2 = ctx.spec().sample_labels(2);
            let words2 = words_up_to(&letters2, cfg.max_word_len);
            let phi1 = |t: &Word| universal_morphism(host.as_ref(), &eps_delta, t);
            for w in &words2 {
                let mut lhs = LinComb::zero();
                for (x, c) in phi1(w)?.iter() {
                    lhs.add_scaled(&delta_word(x, ctx)?, c);
                }
                let mut rhs = LinComb::zero();
                for (Tensor2(a, b), c) in delta_word(w, ctx)?.iter() {
                    for (x, cx) in phi1(a)?.iter() {
                        for (y, cy) in phi1(b)?.iter() {
                            rhs.insert(
                                Tensor2(x.clone(), y.clone()),
                                c.clone() * cx.clone() * cy.clone(),
                            );
                        }
                    }
                }
                if let Some(m) = first_mismatch(w, &lhs, &rhs) {
                    return Ok(Some(m));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "Hoffman isomorphism is an algebra morphism",
        "Θ(u⧢v) = Θ(u)⧺Θ(v)",
        &format!("pairs with |u|+|v| ≤ {}", cfg.max_word_len + 1),
        || {
            for (u, v) in word_pairs(&letters3, cfg.max_word_len + 1) {
                let lhs = hoffman_theta_lc(&shuffle(&u, &v), ctx)?;
                let rhs =
                    quasishuffle_lc(&hoffman_theta(&u, ctx)?, &hoffman_theta(&v, ctx)?, ctx)?;
                if let Some(m) = first_mismatch(&format!("{u} ⧢ {v}"), &lhs, &rhs) {
                    return Ok(Some(m));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "Hoffman isomorphism is a coalgebra morphism",
        "Δ∘Θ = (Θ⊗Θ)∘Δ",
        &sample3,
        || {
            for w in &words3 {
                let mut lhs = LinComb::zero();
                for (x, c) in hoffman_theta(w, ctx)?.iter() {
                    lhs.add_scaled(&deconcatenate(x), c);
                }
                let mut rhs = LinComb::zero();
                for (Tensor2(a, b), c) in deconcatenate(w).iter() {
                    for (x, cx) in hoffman_theta(a, ctx)?.iter() {
                        for (y, cy) in hoffman_theta(b, ctx)?.iter() {
                            rhs.insert(
                                Tensor2(x.clone(), y.clone()),
                                c.clone() * cx.clone() * cy.clone(),
                            );
                        }
                    }
                }
                if let Some(m) = first_mismatch(w, &lhs, &rhs) {
                    return Ok(Some(m));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "Hoffman inverse",
        "Θ∘Θ⁻¹ = Θ⁻¹∘Θ = Id",
        &sample3,
        || {
            for w in &words3 {
                let there = hoffman_theta_lc(&hoffman_theta_inv(w, ctx)?, ctx)?;
                let back = hoffman_theta_inv_lc(&hoffman_theta(w, ctx)?, ctx)?;
                let want = LinComb::term(w.clone());
                if there != want || back != want {
                    return Ok(Some(format!("input {w}: Θ∘Θ⁻¹ {there}, Θ⁻¹∘Θ {back}")));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "action of characters (word host)",
        "φ↤ε_δ = φ, (φ↤λ)↤μ = φ↤(λ⋆μ), θ'∘θ = id, ψ∘(φ↤λ) = (ψ∘φ)↤λ",
        "words ≤ 3 over 2 letters",
        || {
            let sample = words_up_to(&ctx.spec().sample_labels(2), 3);
            let phi1 = MorphismEval::phi1(&host, ctx.clone());
            let unit_acted = action_sweep(&phi1, &eps_delta)?;
            if let Some(m) = morphisms_agree_on(&phi1, &unit_acted, &sample)? {
                return Ok(Some(format!("φ↤ε_δ ≠ φ: {m}")));
            }
            let lam = Character::eps_coproduct(&host);
            let mu = seeded_word_functional(&host, cfg.seed ^ 17);
            let stepped = action_sweep(&action_sweep(&phi1, &lam)?, &mu)?;
            let joined = action_sweep(&phi1, &char_convolution(&lam, &mu)?)?;
            if let Some(m) = morphisms_agree_on(&stepped, &joined, &sample)? {
                return Ok(Some(format!("(φ↤λ)↤μ ≠ φ↤(λ⋆μ): {m}")));
            }
            let theta_lam = action_sweep(&phi1, &lam)?;
            let induced = char_of_morphism(&theta_lam);
            for w in &sample {
                if induced.eval(w)? != lam.eval(w)? {
                    return Ok(Some(format!("θ'(θ(λ)) ≠ λ at {w}")));
                }
            }
            let psi = MorphismEval::universal(&host, ctx.clone(), &eps_cop);
            let acted = action_sweep(&phi1, &lam)?;
            let left = compose_word_morphism(&psi, &acted);
            let right = action_sweep(&compose_word_morphism(&psi, &phi1), &lam)?;
            if let Some(m) = morphisms_agree_on(&left, &right, &sample)? {
                return Ok(Some(format!("ψ∘(φ↤λ) ≠ (ψ∘φ)↤λ: {m}")));
            }
            Ok(None)
        },
    );

    suite.law(
        "ε_δ is a character (word host)",
        "ε_δ(u⧺v) = ε_δ(u)ε_δ(v), ε_δ(1) = 1",
        "pairs of words ≤ 2",
        || {
            let pairs: Vec<(Word, Word)> = word_pairs(&letters3, 4)
                .into_iter()
                .filter(|(u, v)| u.len() <= 2 && v.len() <= 2)
                .collect();
            let report = is_character(&eps_delta, &pairs)?;
            if report.pass() {
                Ok(None)
            } else {
                let f = &report.failures[0];
                Ok(Some(format!("{}: {} ≠ {}", f.lhs_inputs, f.lhs, f.rhs)))
            }
        },
    );

    suite.law(
        "Υ is an algebra morphism",
        "Υ(u⧺v) = Υ(u)·Υ(v)",
        &format!("pairs with |u|+|v| ≤ {}", cfg.max_word_len + 1),
        || {
            for (u, v) in word_pairs(&letters3, cfg.max_word_len + 1) {
                let lhs = upsilon_to_poly(&quasishuffle(&u, &v, ctx)?, ctx.spec())?;
                let pu = upsilon_to_poly(&LinComb::term(u.clone()), ctx.spec())?;
                let pv = upsilon_to_poly(&LinComb::term(v.clone()), ctx.spec())?;
                let rhs = &pu * &pv;
                if lhs != rhs {
                    return Ok(Some(format!("{u} ⧺ {v}: {lhs} ≠ {rhs}")));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "Hilbert polynomial identity",
        "2·H_2 + H_1 = X²",
        "exact",
        || {
            let lhs = &hilbert_poly(2).scale(&Scalar::from_integer(2.into())) + &hilbert_poly(1);
            let rhs = &Polynomial::x() * &Polynomial::x();
            if lhs == rhs {
                Ok(None)
            } else {
                Ok(Some(format!("{lhs} ≠ {rhs}")))
            }
        },
    );

    Ok(())
}

type GT3 = LinComb<Tensor3<DecoratedGraph, DecoratedGraph, DecoratedGraph>>;

fn graph_laws(suite: &mut Suite, cfg: &RunConfig, ctx: &QShContext) -> Result<()> {
    let spec = ctx.spec();
    let letters = spec.sample_labels(2);
    let bound = cfg.max_vertices.max(5);
    let mut graphs: Vec<DecoratedGraph> = Vec::new();
    for n in 0..=cfg.max_vertices {
        graphs.extend(enumerate_graphs(n, &letters, bound)?);
    }
    let small: Vec<DecoratedGraph> = graphs
        .iter()
        .filter(|g| g.n() <= cfg.trilinear_max_vertices)
        .cloned()
        .collect();
    let sample = format!(
        "all decorated graphs ≤ {} vertices over {} letters",
        cfg.max_vertices,
        letters.len()
    );
    let sample_small = format!(
        "all decorated graphs ≤ {} vertices over {} letters",
        cfg.trilinear_max_vertices,
        letters.len()
    );
    let host = Rc::new(GraphHost::new(ctx.clone(), bound));

    suite.law(
        "bipartition coproduct coassociativity (graphs)",
        "(Δ⊗Id)∘Δ = (Id⊗Δ)∘Δ",
        &sample,
        || {
            for g in &graphs {
                let d = graph_coproduct(g, bound)?;
                let mut lhs: GT3 = LinComb::zero();
                let mut rhs: GT3 = LinComb::zero();
                for (Tensor2(a, b), c) in d.iter() {
                    for (Tensor2(x, y), c2) in graph_coproduct(a, bound)?.iter() {
                        lhs.insert(
                            Tensor3(x.clone(), y.clone(), b.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                    for (Tensor2(x, y), c2) in graph_coproduct(b, bound)?.iter() {
                        rhs.insert(
                            Tensor3(a.clone(), x.clone(), y.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                }
                if let Some(m) = first_mismatch(g, &lhs, &rhs) {
                    return Ok(Some(m));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "bipartition coproduct counit law (graphs)",
        "(ε_Δ⊗Id)∘Δ = Id = (Id⊗ε_Δ)∘Δ",
        &sample,
        || {
            for g in &graphs {
                let mut left = LinComb::zero();
                let mut right = LinComb::zero();
                for (Tensor2(a, b), c) in graph_coproduct(g, bound)?.iter() {
                    if a.n() == 0 {
                        left.insert(b.clone(), c.clone());
                    }
                    if b.n() == 0 {
                        right.insert(a.clone(), c.clone());
                    }
                }
                let want = LinComb::term(g.clone());
                if left != want || right != want {
                    return Ok(Some(format!("input {g}: left {left}, right {right}")));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "Δ is multiplicative (graphs)",
        "Δ(G·H) = Δ(G)·Δ(H)",
        &format!("pairs with ≤ {} vertices total", cfg.max_vertices),
        || {
            for g in &graphs {
                for h in &graphs {
                    if g.n() + h.n() > cfg.max_vertices {
                        continue;
                    }
                    let prod = g.disjoint_union(h, bound)?;
                    let lhs = graph_coproduct(&prod, bound)?;
                    let mut rhs = LinComb::zero();
                    for (Tensor2(a1, b1), c1) in graph_coproduct(g, bound)?.iter() {
                        for (Tensor2(a2, b2), c2) in graph_coproduct(h, bound)?.iter() {
                            rhs.insert(
                                Tensor2(a1.disjoint_union(a2, bound)?, b1.disjoint_union(b2, bound)?),
                                c1.clone() * c2.clone(),
                            );
                        }
                    }
                    if let Some(m) = first_mismatch(&format!("{g}·{h}"), &lhs, &rhs) {
                        return Ok(Some(m));
                    }
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "coaction axioms (graphs)",
        "(ρ⊗Id)ρ = (Id⊗δ_uV)ρ, (Id⊗ε_uV)ρ = Id, ρ(1) = 1⊗1_uV, (ε_Δ⊗Id)ρ(x) = ε_Δ(x)1_uV",
        &sample,
        || {
            for g in &graphs {
                let r = graph_coaction(g, ctx)?;
                let mut lhs = LinComb::zero();
                let mut rhs = LinComb::zero();
                let mut back = LinComb::zero();
                let mut counit_side: VElem = LinComb::zero();
                for (Tensor2(a, v), c) in r.iter() {
                    for (Tensor2(x, u), c2) in graph_coaction(a, ctx)?.iter() {
                        lhs.insert(
                            Tensor3(x.clone(), u.clone(), v.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                    for (Tensor2(v1, v2), c2) in spec.uv_coproduct(v)?.iter() {
                        rhs.insert(
                            Tensor3(a.clone(), v1.clone(), v2.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                    back.insert(a.clone(), c.clone() * spec.uv_counit(v)?);
                    if a.n() == 0 {
                        counit_side.insert(v.clone(), c.clone());
                    }
                }
                if let Some(m) = first_mismatch(g, &lhs, &rhs) {
                    return Ok(Some(m));
                }
                if back != LinComb::term(g.clone()) {
                    return Ok(Some(format!("(Id⊗ε)ρ at {g}: {back}")));
                }
                let mut want: VElem = LinComb::zero();
                if g.n() == 0 {
                    want.insert(VLabel::Unit, Scalar::one());
                }
                if counit_side != want {
                    return Ok(Some(format!("(ε_Δ⊗Id)ρ at {g}: {counit_side}")));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "coaction is an algebra morphism (graphs)",
        "ρ(G·H) = (m⊗·)∘(Id⊗c⊗Id)∘(ρ⊗ρ)",
        &format!("pairs with ≤ {} vertices total", cfg.max_vertices),
        || {
            for g in &graphs {
                for h in &graphs {
                    if g.n() + h.n() > cfg.max_vertices {
                        continue;
                    }
                    let prod = g.disjoint_union(h, bound)?;
                    let lhs = graph_coaction(&prod, ctx)?;
                    let mut rhs = LinComb::zero();
                    for (Tensor2(a, x), c1) in graph_coaction(g, ctx)?.iter() {
                        for (Tensor2(b, y), c2) in graph_coaction(h, ctx)?.iter() {
                            for (l, cl) in spec.uv_product(x, y)?.iter() {
                                rhs.insert(
                                    Tensor2(a.disjoint_union(b, bound)?, l.clone()),
                                    c1.clone() * c2.clone() * cl.clone(),
                                );
                            }
                        }
                    }
                    if let Some(m) = first_mismatch(&format!("{g}·{h}"), &lhs, &rhs) {
                        return Ok(Some(m));
                    }
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "coaction coproduct compatibility (graphs)",
        "(Δ⊗Id)∘ρ = m_{1,3,24}∘(ρ⊗ρ)∘Δ",
        &sample,
        || {
            for g in &graphs {
                let mut lhs = LinComb::zero();
                for (Tensor2(a, v), c) in graph_coaction(g, ctx)?.iter() {
                    for (Tensor2(x, y), c2) in graph_coproduct(a, bound)?.iter() {
                        lhs.insert(
                            Tensor3(x.clone(), y.clone(), v.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                }
                let mut rhs = LinComb::zero();
                for (Tensor2(p, q), c) in graph_coproduct(g, bound)?.iter() {
                    for (Tensor2(p0, p1), c1) in graph_coaction(p, ctx)?.iter() {
                        for (Tensor2(q0, q1), c2) in graph_coaction(q, ctx)?.iter() {
                            for (l, cl) in spec.uv_product(p1, q1)?.iter() {
                                rhs.insert(
                                    Tensor3(p0.clone(), q0.clone(), l.clone()),
                                    c.clone() * c1.clone() * c2.clone() * cl.clone(),
                                );
                            }
                        }
                    }
                }
                if let Some(m) = first_mismatch(g, &lhs, &rhs) {
                    return Ok(Some(m));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "δ counit law (graphs)",
        "(ε_δ⊗Id)∘δ = Id",
        &sample,
        || {
            for g in &graphs {
                let mut back = LinComb::zero();
                for (Tensor2(a, b), c) in graph_delta(g, ctx, bound)?.iter() {
                    back.insert(b.clone(), c.clone() * graph_eps_delta(a, ctx)?);
                }
                if back != LinComb::term(g.clone()) {
                    return Ok(Some(format!("input {g}: got {back}")));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "δ coassociativity (graphs)",
        "(δ⊗Id)∘δ = (Id⊗δ)∘δ",
        &sample_small,
        || {
            for g in &small {
                let d = graph_delta(g, ctx, bound)?;
                let mut lhs: GT3 = LinComb::zero();
                let mut rhs: GT3 = LinComb::zero();
                for (Tensor2(a, b), c) in d.iter() {
                    for (Tensor2(x, y), c2) in graph_delta(a, ctx, bound)?.iter() {
                        lhs.insert(
                            Tensor3(x.clone(), y.clone(), b.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                    for (Tensor2(x, y), c2) in graph_delta(b, ctx, bound)?.iter() {
                        rhs.insert(
                            Tensor3(a.clone(), x.clone(), y.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                }
                if let Some(m) = first_mismatch(g, &lhs, &rhs) {
                    return Ok(Some(m));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "cointeraction (graphs)",
        "(Δ⊗Id)∘δ = m_{1,3,24}∘(δ⊗δ)∘Δ",
        &sample_small,
        || {
            for g in &small {
                let mut lhs: GT3 = LinComb::zero();
                for (Tensor2(a, b), c) in graph_delta(g, ctx, bound)?.iter() {
                    for (Tensor2(x, y), c2) in graph_coproduct(a, bound)?.iter() {
                        lhs.insert(
                            Tensor3(x.clone(), y.clone(), b.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                }
                let mut rhs: GT3 = LinComb::zero();
                for (Tensor2(p, q), c) in graph_coproduct(g, bound)?.iter() {
                    for (Tensor2(p1, p2), c1) in graph_delta(p, ctx, bound)?.iter() {
                        for (Tensor2(q1, q2), c2) in graph_delta(q, ctx, bound)?.iter() {
                            rhs.insert(
                                Tensor3(
                                    p1.clone(),
                                    q1.clone(),
                                    p2.disjoint_union(q2, bound)?,
                                ),
                                c.clone() * c1.clone() * c2.clone(),
                            );
                        }
                    }
                }
                if let Some(m) = first_mismatch(g, &lhs, &rhs) {
                    return Ok(Some(m));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "double compatibility (graphs)",
        "(Id⊗c)∘(ρ⊗Id)∘δ = (δ⊗Id)∘ρ",
        &sample_small,
        || {
            for g in &small {
                let mut lhs = LinComb::zero();
                for (Tensor2(x1, x2), c) in graph_delta(g, ctx, bound)?.iter() {
                    for (Tensor2(x10, x11), c2) in graph_coaction(x1, ctx)?.iter() {
                        lhs.insert(
                            Tensor3(x10.clone(), x2.clone(), x11.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                }
                let mut rhs = LinComb::zero();
                for (Tensor2(x0, x1), c) in graph_coaction(g, ctx)?.iter() {
                    for (Tensor2(a, b), c2) in graph_delta(x0, ctx, bound)?.iter() {
                        rhs.insert(
                            Tensor3(a.clone(), b.clone(), x1.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                }
                if let Some(m) = first_mismatch(g, &lhs, &rhs) {
                    return Ok(Some(m));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "coloration morphism agrees with the universal series",
        "Φ₁(G) = φ_{ε_δ}(G)",
        &sample,
        || {
            let eps = Character::eps_delta(&host);
            for g in &graphs {
                let direct = phi1_graph(g, ctx, bound)?;
                let series = universal_morphism(host.as_ref(), &eps, g)?;
                if let Some(m) = first_mismatch(g, &direct, &series) {
                    return Ok(Some(m));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "coloration morphism is multiplicative",
        "Φ₁(G·H) = Φ₁(G)⧺Φ₁(H)",
        &format!("pairs with ≤ {} vertices total", cfg.max_vertices),
        || {
            for g in &graphs {
                for h in &graphs {
                    if g.n() + h.n() > cfg.max_vertices {
                        continue;
                    }
                    let lhs = phi1_graph(&g.disjoint_union(h, bound)?, ctx, bound)?;
                    let rhs = quasishuffle_lc(
                        &phi1_graph(g, ctx, bound)?,
                        &phi1_graph(h, ctx, bound)?,
                        ctx,
                    )?;
                    if let Some(m) = first_mismatch(&format!("{g}·{h}"), &lhs, &rhs) {
                        return Ok(Some(m));
                    }
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "chromatic polynomial matches deletion–contraction",
        "Υ_V∘Φ₁ = P_del-con",
        &format!(
            "exhaustive ≤ {} vertices, 50 seeded graphs on 5",
            cfg.max_vertices
        ),
        || {
            for g in &graphs {
                let lhs = chromatic_polynomial(g, ctx, bound)?;
                let rhs = chromatic_deletion_contraction(g, bound)?;
                if lhs != rhs {
                    return Ok(Some(format!("{g}: {lhs} ≠ {rhs}")));
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(0x5eed));
            let letter = letters[0].clone();
            for i in 0..50 {
                let g = seeded_graph(&mut rng, 5, &letter);
                let lhs = chromatic_polynomial(&g, ctx, 5.max(bound))?;
                let rhs = chromatic_deletion_contraction(&g, 5.max(bound))?;
                if lhs != rhs {
                    return Ok(Some(format!("random #{i} {g}: {lhs} ≠ {rhs}")));
                }
            }
            Ok(None)
        },
    );

    if spec.name() == "trivial-k" {
        suite.law(
            "chromatic polynomial counts proper colorings",
            "P(G)(q) = #proper colorings with ≤ q colors",
            &format!("graphs ≤ {} vertices, q ≤ 4", cfg.max_vertices),
            || {
                for g in &graphs {
                    let p = chromatic_polynomial(g, ctx, bound)?;
                    for q in 0..=4usize {
                        let got = p.eval(&Scalar::from_integer((q as i64).into()));
                        let want = Scalar::from_integer((count_proper_colorings(g, q) as i64).into());
                        if got != want {
                            return Ok(Some(format!("{g} at q={q}: {got} ≠ {want}")));
                        }
                    }
                }
                Ok(None)
            },
        );
    }

    suite.law(
        "action of characters (graph host)",
        "ε_δ∘(φ₁↤λ) = λ, (φ₁↤λ)↤μ = φ₁↤(λ⋆μ), φ₁↤ε_δ = φ₁",
        &format!("{} seeded characters on graphs ≤ {}", 3, cfg.trilinear_max_vertices),
        || {
            let phi1 = MorphismEval::phi1(&host, ctx.clone());
            let eps = Character::eps_delta(&host);
            let unit_acted = action_sweep(&phi1, &eps)?;
            if let Some(m) = morphisms_agree_on(&phi1, &unit_acted, &small)? {
                return Ok(Some(format!("φ₁↤ε_δ ≠ φ₁: {m}")));
            }
            let chars: Vec<Character<GraphHost>> = (0..3)
                .map(|i| seeded_component_character(&host, cfg.seed.wrapping_add(i)))
                .collect();
            for lam in &chars {
                let acted = action_sweep(&phi1, lam)?;
                let induced = char_of_morphism(&acted);
                for g in &small {
                    if induced.eval(g)? != lam.eval(g)? {
                        return Ok(Some(format!(
                            "θ'(θ({})) ≠ λ at {g}",
                            lam.name()
                        )));
                    }
                }
            }
            for pair in chars.windows(2) {
                let stepped = action_sweep(&action_sweep(&phi1, &pair[0])?, &pair[1])?;
                let joined = action_sweep(&phi1, &char_convolution(&pair[0], &pair[1])?)?;
                if let Some(m) = morphisms_agree_on(&stepped, &joined, &small)? {
                    return Ok(Some(format!(
                        "(φ₁↤{})↤{} ≠ joint: {m}",
                        pair[0].name(),
                        pair[1].name()
                    )));
                }
            }
            Ok(None)
        },
    );

    suite.law(
        "seeded characters are multiplicative (graph host)",
        "λ(G·H) = λ(G)λ(H), λ(1) = 1",
        "pairs of graphs ≤ 2 vertices",
        || {
            let lam = seeded_component_character(&host, cfg.seed.wrapping_add(99));
            let mut pairs = Vec::new();
            for g in &graphs {
                for h in &graphs {
                    if g.n() <= 2 && h.n() <= 2 {
                        pairs.push((g.clone(), h.clone()));
                    }
                }
            }
            let report = is_character(&lam, &pairs)?;
            if report.pass() {
                Ok(None)
            } else {
                let f = &report.failures[0];
                Ok(Some(format!("{}: {} ≠ {}", f.lhs_inputs, f.lhs, f.rhs)))
            }
        },
    );

    suite.law(
        "antipode convolution law transported through Φ₁",
        "⧺(S⊗Id)(Φ₁⊗Φ₁)Δ = ηε_Δ",
        &sample_small,
        || {
            for g in &small {
                let img = phi1_graph(g, ctx, bound)?;
                let mut conv = LinComb::zero();
                for (Tensor2(a, b), c) in graph_coproduct(g, bound)?.iter() {
                    let sa = antipode_lc(&phi1_graph(a, ctx, bound)?, ctx)?;
                    let fb = phi1_graph(b, ctx, bound)?;
                    conv.add_scaled(&quasishuffle_lc(&sa, &fb, ctx)?, c);
                }
                let want = if g.n() == 0 {
                    LinComb::term(Word::empty())
                } else {
                    LinComb::zero()
                };
                if conv != want {
                    return Ok(Some(format!("input {g}: {conv} (image {img})")));
                }
            }
            Ok(None)
        },
    );

    Ok(())
}

/// Runs the whole verification suite for the configured base bialgebra.
pub fn run_axiom_suite(cfg: &RunConfig) -> Result<CheckReport> {
    let ctx = QShContext::new(cfg.spec.clone());
    let mut suite = Suite {
        report: CheckReport {
            spec_name: cfg.spec.name().to_string(),
            seed: cfg.seed,
            entries: Vec::new(),
        },
    };
    let sample = cfg.spec.sample_labels(4);
    for entry in check_v_axioms(&cfg.spec, &sample).entries {
        suite.report.entries.push(CheckEntry {
            law: format!("base bialgebra: {}", entry.law),
            statement: entry.law.clone(),
            sample: format!("{} sampled labels", sample.len()),
            pass: entry.pass,
            witness: entry.witness,
        });
    }
    word_laws(&mut suite, cfg, &ctx)?;
    if cfg.spec.name() == "free-comm" {
        term_count_law(&mut suite, &ctx);
    }
    morphism_laws(&mut suite, cfg, &ctx)?;
    graph_laws(&mut suite, cfg, &ctx)?;
    Ok(suite.report)
}

/// Runs only the decorated-graph section (plus the base axioms).
pub fn run_graph_suite(cfg: &RunConfig) -> Result<CheckReport> {
    let ctx = QShContext::new(cfg.spec.clone());
    let mut suite = Suite {
        report: CheckReport {
            spec_name: cfg.spec.name().to_string(),
            seed: cfg.seed,
            entries: Vec::new(),
        },
    };
    graph_laws(&mut suite, cfg, &ctx)?;
    Ok(suite.report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_is_deterministic() {
        let cfg = RunConfig {
            max_word_len: 2,
            max_vertices: 2,
            trilinear_max_vertices: 2,
            ..RunConfig::new(VSpec::trivial_k())
        };
        let a = run_axiom_suite(&cfg).unwrap().render_text();
        let b = run_axiom_suite(&cfg).unwrap().render_text();
        assert_eq!(a, b);
        assert!(a.contains("summary:"));
    }

    #[test]
    fn small_suite_passes_on_trivial_k() {
        let cfg = RunConfig {
            max_word_len: 3,
            max_vertices: 3,
            trilinear_max_vertices: 2,
            ..RunConfig::new(VSpec::trivial_k())
        };
        let report = run_axiom_suite(&cfg).unwrap();
        assert!(report.all_pass(), "{}", report.render_text());
    }

    #[test]
    fn corrupted_spec_fails_with_witness() {
        // group-like coproduct but counit 0 breaks the counit law
        let json = r#"{
            "name": "broken",
            "basis": ["a"],
            "product": {"a,a": {"a": "1"}},
            "coproduct": {"a": {"a,a": "1"}},
            "counit": {"a": "0"},
            "flags": {"commutative": true, "cocommutative": true}
        }"#;
        let spec = VSpec::from_json(json).unwrap();
        let cfg = RunConfig {
            max_word_len: 2,
            max_vertices: 2,
            trilinear_max_vertices: 2,
            ..RunConfig::new(spec)
        };
        let report = run_axiom_suite(&cfg).unwrap();
        assert!(!report.all_pass());
        assert!(report
            .entries
            .iter()
            .any(|e| !e.pass && e.witness.is_some()));
    }
}
