//! The base bialgebra `(V, ·, δ_V)`: basis labels, structure constants,
//! built-in presets, the unitary extension `uV`, and sampled axiom checks.
//!
//! Indexed (infinite) bases are supported lazily: the built-in families
//! compute structure constants from the label itself and never materialize
//! tables. Fully general finite tables are accepted via JSON.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::lincomb::{lc_tensor, LinComb, Tensor2};
use crate::scalar::{self, Scalar};

pub const UNIT_TOKEN: &str = "1_uV";

/// A basis label of `V`, or the distinguished unit adjoined by `uV`.
/// The unit never appears as a letter inside a word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VLabel {
    Unit,
    Tok(String),
}

impl VLabel {
    pub fn tok(s: impl Into<String>) -> Self {
        VLabel::Tok(s.into())
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, VLabel::Unit)
    }
}

impl fmt::Display for VLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VLabel::Unit => write!(f, "{UNIT_TOKEN}"),
            VLabel::Tok(s) => write!(f, "{s}"),
        }
    }
}

/// An element of `V` (or `uV`): a finite combination of basis labels.
pub type VElem = LinComb<VLabel>;

#[derive(Clone, Debug, Default)]
pub struct Flags {
    /// `Some(u)` iff the spec is declared unital with unit element `u`.
    pub unit: Option<VElem>,
    pub commutative: bool,
    pub cocommutative: bool,
}

#[derive(Clone, Debug)]
struct Table {
    basis: Vec<String>,
    product: BTreeMap<(String, String), VElem>,
    coproduct: BTreeMap<String, LinComb<Tensor2<VLabel, VLabel>>>,
    counit: BTreeMap<String, Scalar>,
}

#[derive(Clone, Debug)]
enum Backend {
    /// One idempotent basis element `e`, treated as nonunitary.
    TrivialK,
    /// Semigroup algebra of the positive integers under addition; labels
    /// are decimal integers (`e_n` is accepted and normalized to `n`).
    NatSemigroup,
    /// Group algebra of `(Z/2Z, ×)`; labels `0`, `1`, unit `1`.
    Z2Mult,
    /// Free commutative semigroup on identifier generators; labels are
    /// `*`-joined sorted monomials such as `x`, `x*y`, `x*x*y`.
    FreeComm,
    /// Explicit structure constants. Missing table entries read as zero.
    Table(Table),
    /// The unitary extension of an inner nonunitary spec.
    Unitary(Box<VSpec>),
}

#[derive(Clone, Debug)]
pub struct VSpec {
    name: String,
    backend: Backend,
    flags: Flags,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Characters a label token may use in the text syntax.
pub fn is_label_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '*' || c == '^'
}

impl VSpec {
    pub fn trivial_k() -> Self {
        VSpec {
            name: "trivial-k".into(),
            backend: Backend::TrivialK,
            flags: Flags {
                unit: None,
                commutative: true,
                cocommutative: true,
            },
        }
    }

    pub fn nat_semigroup() -> Self {
        VSpec {
            name: "nat-semigroup".into(),
            backend: Backend::NatSemigroup,
            flags: Flags {
                unit: None,
                commutative: true,
                cocommutative: true,
            },
        }
    }

    pub fn z2_mult() -> Self {
        VSpec {
            name: "z2-mult".into(),
            backend: Backend::Z2Mult,
            flags: Flags {
                unit: Some(VElem::term(VLabel::tok("1"))),
                commutative: true,
                cocommutative: true,
            },
        }
    }

    pub fn free_comm() -> Self {
        VSpec {
            name: "free-comm".into(),
            backend: Backend::FreeComm,
            flags: Flags {
                unit: None,
                commutative: true,
                cocommutative: true,
            },
        }
    }

    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "trivial-k" | "trivial-K" => Some(Self::trivial_k()),
            "nat-semigroup" | "qsym" => Some(Self::nat_semigroup()),
            "z2-mult" => Some(Self::z2_mult()),
            "free-comm" => Some(Self::free_comm()),
            _ => None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_commutative(&self) -> bool {
        self.flags.commutative
    }

    pub fn is_cocommutative(&self) -> bool {
        self.flags.cocommutative
    }

    pub fn unit(&self) -> Option<&VElem> {
        self.flags.unit.as_ref()
    }

    fn unknown(&self, label: &VLabel) -> Error {
        Error::UnknownLabel {
            label: label.to_string(),
            spec: self.name.clone(),
        }
    }

    /// Validates a raw token and brings it to canonical form.
    pub fn normalize_label(&self, raw: &str) -> Result<VLabel> {
        let bad = || Error::UnknownLabel {
            label: raw.to_string(),
            spec: self.name.clone(),
        };
        match &self.backend {
            Backend::TrivialK => (raw == "e").then(|| VLabel::tok("e")).ok_or_else(bad),
            Backend::NatSemigroup => {
                let digits = raw.strip_prefix("e_").unwrap_or(raw);
                let n: u64 = digits.parse().map_err(|_| bad())?;
                if n == 0 {
                    return Err(bad());
                }
                Ok(VLabel::tok(n.to_string()))
            }
            Backend::Z2Mult => (raw == "0" || raw == "1")
                .then(|| VLabel::tok(raw))
                .ok_or_else(bad),
            Backend::FreeComm => {
                let mut parts: Vec<&str> = raw.split('*').collect();
                if parts.iter().any(|p| !is_identifier(p)) {
                    return Err(bad());
                }
                parts.sort_unstable();
                Ok(VLabel::tok(parts.join("*")))
            }
            Backend::Table(t) => t
                .basis
                .iter()
                .any(|b| b == raw)
                .then(|| VLabel::tok(raw))
                .ok_or_else(bad),
            Backend::Unitary(inner) => {
                if raw == UNIT_TOKEN {
                    Ok(VLabel::Unit)
                } else {
                    inner.normalize_label(raw)
                }
            }
        }
    }

    pub fn contains(&self, label: &VLabel) -> bool {
        match label {
            VLabel::Unit => matches!(self.backend, Backend::Unitary(_)),
            VLabel::Tok(s) => self
                .normalize_label(s)
                .map(|n| &n == label)
                .unwrap_or(false),
        }
    }

    /// Product structure constants on a pair of labels.
    pub fn product(&self, a: &VLabel, b: &VLabel) -> Result<VElem> {
        match &self.backend {
            Backend::Unitary(inner) => match (a, b) {
                (VLabel::Unit, _) => {
                    if self.contains(b) {
                        Ok(VElem::term(b.clone()))
                    } else {
                        Err(self.unknown(b))
                    }
                }
                (_, VLabel::Unit) => {
                    if self.contains(a) {
                        Ok(VElem::term(a.clone()))
                    } else {
                        Err(self.unknown(a))
                    }
                }
                _ => inner.product(a, b),
            },
            _ => {
                let (ta, tb) = match (a, b) {
                    (VLabel::Tok(ta), VLabel::Tok(tb)) => (ta, tb),
                    (VLabel::Unit, _) => return Err(self.unknown(a)),
                    (_, VLabel::Unit) => return Err(self.unknown(b)),
                };
                if !self.contains(a) {
                    return Err(self.unknown(a));
                }
                if !self.contains(b) {
                    return Err(self.unknown(b));
                }
                match &self.backend {
                    Backend::TrivialK => Ok(VElem::term(VLabel::tok("e"))),
                    Backend::NatSemigroup => {
                        let m: u64 = ta.parse().expect("validated");
                        let n: u64 = tb.parse().expect("validated");
                        Ok(VElem::term(VLabel::tok((m + n).to_string())))
                    }
                    Backend::Z2Mult => {
                        let prod = if ta == "1" && tb == "1" { "1" } else { "0" };
                        Ok(VElem::term(VLabel::tok(prod)))
                    }
                    Backend::FreeComm => {
                        let mut parts: Vec<&str> =
                            ta.split('*').chain(tb.split('*')).collect();
                        parts.sort_unstable();
                        Ok(VElem::term(VLabel::tok(parts.join("*"))))
                    }
                    Backend::Table(t) => {
                        let out = t
                            .product
                            .get(&(ta.clone(), tb.clone()))
                            .cloned()
                            .unwrap_or_else(VElem::zero);
                        for l in out.terms() {
                            if !self.contains(l) {
                                return Err(self.unknown(l));
                            }
                        }
                        Ok(out)
                    }
                    Backend::Unitary(_) => unreachable!(),
                }
            }
        }
    }

    /// Coproduct structure constants on a label.
    pub fn coproduct(&self, a: &VLabel) -> Result<LinComb<Tensor2<VLabel, VLabel>>> {
        match (&self.backend, a) {
            (Backend::Unitary(_), VLabel::Unit) => {
                Ok(LinComb::term(Tensor2(VLabel::Unit, VLabel::Unit)))
            }
            (Backend::Unitary(inner), _) => inner.coproduct(a),
            (Backend::Table(t), VLabel::Tok(s)) => {
                if !self.contains(a) {
                    return Err(self.unknown(a));
                }
                let out = t.coproduct.get(s).cloned().unwrap_or_else(LinComb::zero);
                for Tensor2(x, y) in out.terms() {
                    if !self.contains(x) {
                        return Err(self.unknown(x));
                    }
                    if !self.contains(y) {
                        return Err(self.unknown(y));
                    }
                }
                Ok(out)
            }
            // every built-in family is group-like
            _ => {
                if !self.contains(a) {
                    return Err(self.unknown(a));
                }
                Ok(LinComb::term(Tensor2(a.clone(), a.clone())))
            }
        }
    }

    pub fn counit(&self, a: &VLabel) -> Result<Scalar> {
        match (&self.backend, a) {
            (Backend::Unitary(_), VLabel::Unit) => Ok(Scalar::one()),
            (Backend::Unitary(inner), _) => inner.counit(a),
            (Backend::Table(t), VLabel::Tok(s)) => {
                if !self.contains(a) {
                    return Err(self.unknown(a));
                }
                Ok(t.counit.get(s).cloned().unwrap_or_else(Scalar::zero))
            }
            _ => {
                if !self.contains(a) {
                    return Err(self.unknown(a));
                }
                Ok(Scalar::one())
            }
        }
    }

    /// Bilinear extension of the product to elements.
    pub fn elem_product(&self, a: &VElem, b: &VElem) -> Result<VElem> {
        let mut out = VElem::zero();
        for (la, ca) in a.iter() {
            for (lb, cb) in b.iter() {
                out.add_scaled(&self.product(la, lb)?, &(ca.clone() * cb.clone()));
            }
        }
        Ok(out)
    }

    pub fn elem_coproduct(&self, a: &VElem) -> Result<LinComb<Tensor2<VLabel, VLabel>>> {
        a.try_map_terms(|l| self.coproduct(l))
    }

    pub fn elem_counit(&self, a: &VElem) -> Result<Scalar> {
        a.try_fold_scalar(|l| self.counit(l))
    }

    /// Product in `uV`, treating [`VLabel::Unit`] as the adjoined unit even
    /// when the spec itself has not been extended.
    pub fn uv_product(&self, a: &VLabel, b: &VLabel) -> Result<VElem> {
        match (a, b) {
            (VLabel::Unit, VLabel::Unit) => Ok(VElem::term(VLabel::Unit)),
            (VLabel::Unit, _) => Ok(VElem::term(b.clone())),
            (_, VLabel::Unit) => Ok(VElem::term(a.clone())),
            _ => self.product(a, b),
        }
    }

    pub fn uv_coproduct(&self, a: &VLabel) -> Result<LinComb<Tensor2<VLabel, VLabel>>> {
        match a {
            VLabel::Unit => Ok(LinComb::term(Tensor2(VLabel::Unit, VLabel::Unit))),
            _ => self.coproduct(a),
        }
    }

    pub fn uv_counit(&self, a: &VLabel) -> Result<Scalar> {
        match a {
            VLabel::Unit => Ok(Scalar::one()),
            _ => self.counit(a),
        }
    }

    /// Adjoins a unit. Rejects specs that already declare one.
    pub fn unitary_extension(&self) -> Result<VSpec> {
        if self.flags.unit.is_some() {
            return Err(Error::AlreadyUnital {
                spec: self.name.clone(),
            });
        }
        Ok(VSpec {
            name: format!("u({})", self.name),
            flags: Flags {
                unit: Some(VElem::term(VLabel::Unit)),
                commutative: self.flags.commutative,
                cocommutative: self.flags.cocommutative,
            },
            backend: Backend::Unitary(Box::new(self.clone())),
        })
    }

    /// A deterministic sample of basis labels, used by the checkers.
    pub fn sample_labels(&self, k: usize) -> Vec<VLabel> {
        match &self.backend {
            Backend::TrivialK => vec![VLabel::tok("e")],
            Backend::NatSemigroup => (1..=k as u64).map(|n| VLabel::tok(n.to_string())).collect(),
            Backend::Z2Mult => {
                let all = [VLabel::tok("0"), VLabel::tok("1")];
                all.into_iter().take(k.max(1)).collect()
            }
            Backend::FreeComm => ["x", "y", "z", "t", "a", "b", "c", "d"]
                .iter()
                .take(k)
                .map(|s| VLabel::tok(*s))
                .collect(),
            Backend::Table(t) => t.basis.iter().take(k).map(VLabel::tok).collect(),
            Backend::Unitary(inner) => inner.sample_labels(k),
        }
    }

    pub fn from_json(text: &str) -> Result<VSpec> {
        let file: VSpecFile = serde_json::from_str(text)?;
        file.build()
    }

    pub fn load(source: &str) -> Result<VSpec> {
        if let Some(p) = Self::preset(source) {
            return Ok(p);
        }
        let path = std::path::Path::new(source);
        if path.exists() {
            let text = std::fs::read_to_string(path)?;
            return Self::from_json(&text);
        }
        Err(Error::InvalidInput(format!(
            "`{source}` is neither a preset (trivial-k, nat-semigroup, z2-mult, free-comm) nor a readable file"
        )))
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum BasisField {
    List(Vec<String>),
    Indexed { indexed: String },
}

#[derive(Deserialize)]
struct FlagsFile {
    #[serde(default)]
    unital: bool,
    #[serde(default)]
    unit: Option<BTreeMap<String, String>>,
    #[serde(default)]
    commutative: bool,
    #[serde(default)]
    cocommutative: bool,
}

#[derive(Deserialize)]
struct VSpecFile {
    #[serde(default)]
    name: Option<String>,
    basis: BasisField,
    #[serde(default)]
    product: Option<BTreeMap<String, BTreeMap<String, String>>>,
    #[serde(default)]
    coproduct: Option<BTreeMap<String, BTreeMap<String, String>>>,
    #[serde(default)]
    counit: Option<BTreeMap<String, String>>,
    #[serde(default)]
    flags: Option<FlagsFile>,
}

fn parse_elem_map(m: &BTreeMap<String, String>) -> Result<VElem> {
    let mut out = VElem::zero();
    for (label, coeff) in m {
        out.insert(VLabel::tok(label), scalar::parse(coeff)?);
    }
    Ok(out)
}

impl VSpecFile {
    fn build(self) -> Result<VSpec> {
        match self.basis {
            BasisField::Indexed { indexed } => {
                if self.product.is_some() || self.coproduct.is_some() || self.counit.is_some() {
                    return Err(Error::InvalidInput(
                        "an indexed basis does not take explicit tables".into(),
                    ));
                }
                VSpec::preset(match indexed.as_str() {
                    "nat" => "nat-semigroup",
                    "free-comm" => "free-comm",
                    other => {
                        return Err(Error::InvalidInput(format!(
                            "unknown indexed family `{other}` (expected `nat` or `free-comm`)"
                        )))
                    }
                })
                .ok_or_else(|| Error::InvalidInput("preset lookup failed".into()))
            }
            BasisField::List(basis) => {
                for b in &basis {
                    if b == UNIT_TOKEN {
                        return Err(Error::InvalidInput(format!(
                            "`{UNIT_TOKEN}` is reserved for the adjoined unit"
                        )));
                    }
                    if b.is_empty() || !b.chars().all(is_label_char) {
                        return Err(Error::InvalidInput(format!("invalid basis label `{b}`")));
                    }
                }
                let mut product = BTreeMap::new();
                for (key, val) in self.product.unwrap_or_default() {
                    let (a, b) = key.split_once(',').ok_or_else(|| {
                        Error::InvalidInput(format!("product key `{key}` is not `a,b`"))
                    })?;
                    product.insert(
                        (a.trim().to_string(), b.trim().to_string()),
                        parse_elem_map(&val)?,
                    );
                }
                let mut coproduct = BTreeMap::new();
                for (label, val) in self.coproduct.unwrap_or_default() {
                    let mut lc = LinComb::zero();
                    for (pair, coeff) in &val {
                        let (x, y) = pair.split_once(',').ok_or_else(|| {
                            Error::InvalidInput(format!("coproduct key `{pair}` is not `a,b`"))
                        })?;
                        lc.insert(
                            Tensor2(VLabel::tok(x.trim()), VLabel::tok(y.trim())),
                            scalar::parse(coeff)?,
                        );
                    }
                    coproduct.insert(label, lc);
                }
                let mut counit = BTreeMap::new();
                for (label, coeff) in self.counit.unwrap_or_default() {
                    counit.insert(label, scalar::parse(&coeff)?);
                }
                let flags_file = self.flags;
                let (unit, commutative, cocommutative) = match flags_file {
                    None => (None, false, false),
                    Some(ff) => {
                        let unit = if ff.unital {
                            Some(match &ff.unit {
                                Some(m) => parse_elem_map(m)?,
                                None => {
                                    return Err(Error::InvalidInput(
                                        "`unital: true` requires a `unit` element".into(),
                                    ))
                                }
                            })
                        } else {
                            None
                        };
                        (unit, ff.commutative, ff.cocommutative)
                    }
                };
                Ok(VSpec {
                    name: self.name.unwrap_or_else(|| "user".into()),
                    backend: Backend::Table(Table {
                        basis,
                        product,
                        coproduct,
                        counit,
                    }),
                    flags: Flags {
                        unit,
                        commutative,
                        cocommutative,
                    },
                })
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct VAxiomEntry {
    pub law: String,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default)]
pub struct VAxiomReport {
    pub entries: Vec<VAxiomEntry>,
}

impl VAxiomReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    fn push(&mut self, law: &str, witness: Option<String>) {
        self.entries.push(VAxiomEntry {
            law: law.to_string(),
            pass: witness.is_none(),
            witness,
        });
    }
}

/// Runs the definitional bialgebra axioms on a finite label sample.
/// Failures are report entries with witnesses, never errors; declared
/// flags are verified, undeclared ones are not assumed.
pub fn check_v_axioms(spec: &VSpec, sample: &[VLabel]) -> VAxiomReport {
    let mut report = VAxiomReport::default();
    let run = |f: &mut dyn FnMut() -> Result<Option<String>>| match f() {
        Ok(w) => w,
        Err(e) => Some(format!("operation failed: {e}")),
    };

    let elem = |l: &VLabel| VElem::term(l.clone());

    report.push(
        "associativity: (a·b)·c = a·(b·c)",
        run(&mut || {
            for a in sample {
                for b in sample {
                    for c in sample {
                        let ab = spec.elem_product(&elem(a), &elem(b))?;
                        let bc = spec.elem_product(&elem(b), &elem(c))?;
                        let lhs = spec.elem_product(&ab, &elem(c))?;
                        let rhs = spec.elem_product(&elem(a), &bc)?;
                        if lhs != rhs {
                            return Ok(Some(format!(
                                "a={a}, b={b}, c={c}: ({ab})·{c} = {lhs} but {a}·({bc}) = {rhs}"
                            )));
                        }
                    }
                }
            }
            Ok(None)
        }),
    );

    report.push(
        "coassociativity: (δ_V⊗Id)δ_V = (Id⊗δ_V)δ_V",
        run(&mut || {
            for a in sample {
                let d = spec.coproduct(a)?;
                let mut lhs = LinComb::zero();
                let mut rhs = LinComb::zero();
                for (Tensor2(x, y), c) in d.iter() {
                    for (Tensor2(u, v), c2) in spec.coproduct(x)?.iter() {
                        lhs.insert(
                            crate::lincomb::Tensor3(u.clone(), v.clone(), y.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                    for (Tensor2(u, v), c2) in spec.coproduct(y)?.iter() {
                        rhs.insert(
                            crate::lincomb::Tensor3(x.clone(), u.clone(), v.clone()),
                            c.clone() * c2.clone(),
                        );
                    }
                }
                if lhs != rhs {
                    return Ok(Some(format!("a={a}: {lhs} ≠ {rhs}")));
                }
            }
            Ok(None)
        }),
    );

    report.push(
        "counit law: (ε_V⊗Id)δ_V = Id = (Id⊗ε_V)δ_V",
        run(&mut || {
            for a in sample {
                let d = spec.coproduct(a)?;
                let mut left = VElem::zero();
                let mut right = VElem::zero();
                for (Tensor2(x, y), c) in d.iter() {
                    left.insert(y.clone(), c.clone() * spec.counit(x)?);
                    right.insert(x.clone(), c.clone() * spec.counit(y)?);
                }
                let want = elem(a);
                if left != want || right != want {
                    return Ok(Some(format!("a={a}: left={left}, right={right}")));
                }
            }
            Ok(None)
        }),
    );

    report.push(
        "compatibility: δ_V(a·b) = δ_V(a)·δ_V(b) and ε_V(a·b) = ε_V(a)ε_V(b)",
        run(&mut || {
            for a in sample {
                for b in sample {
                    let prod = spec.elem_product(&elem(a), &elem(b))?;
                    let lhs = spec.elem_coproduct(&prod)?;
                    let da = spec.coproduct(a)?;
                    let db = spec.coproduct(b)?;
                    let mut rhs = LinComb::zero();
                    for (Tensor2(x1, y1), c1) in da.iter() {
                        for (Tensor2(x2, y2), c2) in db.iter() {
                            let first = spec.product(x1, x2)?;
                            let second = spec.product(y1, y2)?;
                            rhs.add_scaled(
                                &lc_tensor(&first, &second),
                                &(c1.clone() * c2.clone()),
                            );
                        }
                    }
                    if lhs != rhs {
                        return Ok(Some(format!("a={a}, b={b}: {lhs} ≠ {rhs}")));
                    }
                    let el = spec.elem_counit(&prod)?;
                    let er = spec.counit(a)? * spec.counit(b)?;
                    if el != er {
                        return Ok(Some(format!("a={a}, b={b}: ε(a·b)={el} ≠ {er}")));
                    }
                }
            }
            Ok(None)
        }),
    );

    if spec.is_commutative() {
        report.push(
            "commutativity: a·b = b·a",
            run(&mut || {
                for a in sample {
                    for b in sample {
                        let lhs = spec.product(a, b)?;
                        let rhs = spec.product(b, a)?;
                        if lhs != rhs {
                            return Ok(Some(format!("a={a}, b={b}: {lhs} ≠ {rhs}")));
                        }
                    }
                }
                Ok(None)
            }),
        );
    }

    if spec.is_cocommutative() {
        report.push(
            "cocommutativity: δ_V = δ_V^op",
            run(&mut || {
                for a in sample {
                    let d = spec.coproduct(a)?;
                    let mut flipped = LinComb::zero();
                    for (Tensor2(x, y), c) in d.iter() {
                        flipped.insert(Tensor2(y.clone(), x.clone()), c.clone());
                    }
                    if d != flipped {
                        return Ok(Some(format!("a={a}: {d} ≠ {flipped}")));
                    }
                }
                Ok(None)
            }),
        );
    }

    if let Some(unit) = spec.unit().cloned() {
        report.push(
            "unit laws: 1·a = a·1 = a, δ_V(1) = 1⊗1, ε_V(1) = 1",
            run(&mut || {
                for a in sample {
                    let left = spec.elem_product(&unit, &elem(a))?;
                    let right = spec.elem_product(&elem(a), &unit)?;
                    if left != elem(a) || right != elem(a) {
                        return Ok(Some(format!("a={a}: 1·a={left}, a·1={right}")));
                    }
                }
                let d = spec.elem_coproduct(&unit)?;
                let mut want = LinComb::zero();
                for (x, cx) in unit.iter() {
                    for (y, cy) in unit.iter() {
                        want.insert(Tensor2(x.clone(), y.clone()), cx.clone() * cy.clone());
                    }
                }
                if d != want {
                    return Ok(Some(format!("δ_V(1) = {d} ≠ {want}")));
                }
                if spec.elem_counit(&unit)? != Scalar::one() {
                    return Ok(Some("ε_V(1) ≠ 1".into()));
                }
                Ok(None)
            }),
        );
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn tok(s: &str) -> VLabel {
        VLabel::tok(s)
    }

    #[test]
    fn nat_product_adds_indices() {
        let v = VSpec::nat_semigroup();
        let got = v
            .elem_product(&VElem::term(tok("2")), &VElem::term(tok("3")))
            .unwrap();
        assert_eq!(got, VElem::term(tok("5")));
    }

    #[test]
    fn trivial_k_idempotent() {
        let v = VSpec::trivial_k();
        let e = VElem::term(tok("e"));
        assert_eq!(v.elem_product(&e, &e).unwrap(), e);
    }

    #[test]
    fn uv_unit_is_neutral() {
        let v = VSpec::nat_semigroup().unitary_extension().unwrap();
        for n in ["1", "2", "5"] {
            let x = VElem::term(tok(n));
            let u = VElem::term(VLabel::Unit);
            assert_eq!(v.elem_product(&u, &x).unwrap(), x);
            assert_eq!(v.elem_product(&x, &u).unwrap(), x);
        }
        assert_eq!(v.elem_counit(&VElem::term(VLabel::Unit)).unwrap(), int(1));
    }

    #[test]
    fn nat_coproduct_group_like() {
        let v = VSpec::nat_semigroup();
        let got = v.coproduct(&tok("4")).unwrap();
        assert_eq!(got, LinComb::term(Tensor2(tok("4"), tok("4"))));
    }

    #[test]
    fn uv_coproduct_of_unit() {
        let v = VSpec::trivial_k().unitary_extension().unwrap();
        assert_eq!(
            v.coproduct(&VLabel::Unit).unwrap(),
            LinComb::term(Tensor2(VLabel::Unit, VLabel::Unit))
        );
    }

    #[test]
    fn counit_linear() {
        let v = VSpec::nat_semigroup();
        let mut x = VElem::zero();
        x.insert(tok("1"), int(3));
        x.insert(tok("2"), int(-2));
        assert_eq!(v.elem_counit(&x).unwrap(), int(1));
    }

    #[test]
    fn unitary_extension_of_trivial_k_matches_z2_mult() {
        // u(trivial-k) ≅ K(Z/2Z,×) under 1_uV ↦ 1, e ↦ 0.
        let u = VSpec::trivial_k().unitary_extension().unwrap();
        let z2 = VSpec::z2_mult();
        let map = |l: &VLabel| match l {
            VLabel::Unit => tok("1"),
            VLabel::Tok(_) => tok("0"),
        };
        let labels = [VLabel::Unit, tok("e")];
        for a in &labels {
            for b in &labels {
                let lhs: VElem = u
                    .product(a, b)
                    .unwrap()
                    .map_terms(|l| VElem::term(map(l)));
                let rhs = z2.product(&map(a), &map(b)).unwrap();
                assert_eq!(lhs, rhs);
            }
            let lhs_cop = u.coproduct(a).unwrap().map_terms(|Tensor2(x, y)| {
                LinComb::term(Tensor2(map(x), map(y)))
            });
            assert_eq!(lhs_cop, z2.coproduct(&map(a)).unwrap());
            assert_eq!(u.counit(a).unwrap(), z2.counit(&map(a)).unwrap());
        }
    }

    #[test]
    fn unitary_extension_rejects_unital() {
        assert!(matches!(
            VSpec::z2_mult().unitary_extension(),
            Err(Error::AlreadyUnital { .. })
        ));
        assert!(VSpec::nat_semigroup()
            .unitary_extension()
            .unwrap()
            .unitary_extension()
            .is_err());
    }

    #[test]
    fn nat_extension_basis_contains_unit_and_indices() {
        let u = VSpec::nat_semigroup().unitary_extension().unwrap();
        assert!(u.contains(&VLabel::Unit));
        assert!(u.contains(&tok("7")));
        assert_eq!(u.normalize_label(UNIT_TOKEN).unwrap(), VLabel::Unit);
    }

    #[test]
    fn free_comm_monomials_sort() {
        let v = VSpec::free_comm();
        assert_eq!(v.normalize_label("y*x").unwrap(), tok("x*y"));
        let p = v.product(&tok("x"), &tok("x*y")).unwrap();
        assert_eq!(p, VElem::term(tok("x*x*y")));
        assert!(v.normalize_label("3x").is_err());
    }

    #[test]
    fn nat_accepts_e_prefix_alias() {
        let v = VSpec::nat_semigroup();
        assert_eq!(v.normalize_label("e_2").unwrap(), tok("2"));
        assert!(v.normalize_label("e_0").is_err());
        assert!(v.normalize_label("0").is_err());
    }

    #[test]
    fn axioms_pass_on_presets() {
        for spec in [
            VSpec::trivial_k(),
            VSpec::nat_semigroup(),
            VSpec::z2_mult(),
            VSpec::free_comm(),
            VSpec::nat_semigroup().unitary_extension().unwrap(),
        ] {
            let sample = spec.sample_labels(4);
            let report = check_v_axioms(&spec, &sample);
            assert!(report.all_pass(), "{}: {:?}", spec.name(), report.entries);
        }
    }

    #[test]
    fn empty_sample_is_vacuous() {
        let report = check_v_axioms(&VSpec::nat_semigroup(), &[]);
        assert!(report.all_pass());
    }

    #[test]
    fn corrupted_table_fails_associativity_with_witness() {
        // a·a = b, a·b = b, b·a = a, b·b = a is not associative.
        let json = r#"{
            "name": "broken",
            "basis": ["a", "b"],
            "product": {
                "a,a": {"b": "1"}, "a,b": {"b": "1"},
                "b,a": {"a": "1"}, "b,b": {"a": "1"}
            },
            "coproduct": {"a": {"a,a": "1"}, "b": {"b,b": "1"}},
            "counit": {"a": "1", "b": "1"}
        }"#;
        let spec = VSpec::from_json(json).unwrap();
        let report = check_v_axioms(&spec, &[tok("a"), tok("b")]);
        let assoc = report
            .entries
            .iter()
            .find(|e| e.law.starts_with("associativity"))
            .unwrap();
        assert!(!assoc.pass);
        assert!(assoc.witness.is_some());
    }

    #[test]
    fn json_round_trip_of_trivial_like_table() {
        let json = r#"{
            "name": "tiny",
            "basis": ["a"],
            "product": {"a,a": {"a": "1"}},
            "coproduct": {"a": {"a,a": "1"}},
            "counit": {"a": "1"},
            "flags": {"commutative": true, "cocommutative": true}
        }"#;
        let spec = VSpec::from_json(json).unwrap();
        assert!(check_v_axioms(&spec, &[tok("a")]).all_pass());
        assert!(spec.is_commutative());
    }

    #[test]
    fn indexed_json_selects_family() {
        let spec = VSpec::from_json(r#"{"basis": {"indexed": "nat"}}"#).unwrap();
        assert_eq!(spec.name(), "nat-semigroup");
    }
}
