//! The double bialgebra of `V`-decorated graphs: disjoint-union product,
//! bipartition coproduct Δ, contraction–extraction coproduct δ over
//! connected partitions, coaction, the coloration morphism into words,
//! and chromatic specializations with an independent oracle.
//!
//! Graphs are isomorphism classes: every constructor canonicalizes by
//! brute-force permutation minimization, which is why a vertex bound is
//! enforced everywhere.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_traits::{One, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::expr::parse_label_lincomb;
use crate::host::Host;
use crate::lincomb::{expand_product, LinComb, Tensor2};
use crate::morphism::upsilon_to_poly;
use crate::poly::Polynomial;
use crate::quasishuffle::QShContext;
use crate::scalar::Scalar;
use crate::vspec::{VElem, VLabel, VSpec};
use crate::word::Word;

pub const DEFAULT_VERTEX_BOUND: usize = 10;

/// A simple graph with decorated vertices, stored in canonical form: the
/// minimum over all vertex permutations of (decorations, edge list).
/// Equality is therefore decorated-isomorphism equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DecoratedGraph {
    dec: Vec<VLabel>,
    edges: BTreeSet<(usize, usize)>,
}

fn for_each_permutation(n: usize, f: &mut dyn FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    fn go(perm: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == perm.len() {
            f(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            go(perm, k + 1, f);
            perm.swap(k, i);
        }
    }
    go(&mut perm, 0, f);
}

fn apply_perm(
    dec: &[VLabel],
    edges: &BTreeSet<(usize, usize)>,
    perm: &[usize],
) -> (Vec<VLabel>, BTreeSet<(usize, usize)>) {
    let mut new_dec = vec![VLabel::Unit; dec.len()];
    for (i, d) in dec.iter().enumerate() {
        new_dec[perm[i]] = d.clone();
    }
    let new_edges = edges
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (perm[a], perm[b]);
            (x.min(y), x.max(y))
        })
        .collect();
    (new_dec, new_edges)
}

impl DecoratedGraph {
    /// Builds and canonicalizes. Vertices are `0..dec.len()`; loops are
    /// rejected, duplicate edges collapse.
    pub fn new(
        dec: Vec<VLabel>,
        edges: impl IntoIterator<Item = (usize, usize)>,
        bound: usize,
    ) -> Result<Self> {
        let n = dec.len();
        if n > bound {
            return Err(Error::SizeExceeded { n, bound });
        }
        if dec.iter().any(VLabel::is_unit) {
            return Err(Error::UnitLetter);
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidInput(format!("loop at vertex {}", a + 1)));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({},{}) out of range",
                    a + 1,
                    b + 1
                )));
            }
            set.insert((a.min(b), a.max(b)));
        }
        let mut best: Option<(Vec<VLabel>, BTreeSet<(usize, usize)>)> = None;
        for_each_permutation(n, &mut |perm| {
            let cand = apply_perm(&dec, &set, perm);
            if best.as_ref().map(|b| cand < *b).unwrap_or(true) {
                best = Some(cand);
            }
        });
        let (dec, edges) = best.expect("at least the identity permutation");
        Ok(DecoratedGraph { dec, edges })
    }

    pub fn empty() -> Self {
        DecoratedGraph {
            dec: vec![],
            edges: BTreeSet::new(),
        }
    }

    pub fn vertex(label: VLabel) -> Result<Self> {
        Self::new(vec![label], [], DEFAULT_VERTEX_BOUND)
    }

    pub fn n(&self) -> usize {
        self.dec.len()
    }

    pub fn decorations(&self) -> &[VLabel] {
        &self.dec
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edges(&self) -> bool {
        !self.edges.is_empty()
    }

    /// Disjoint union, canonicalized.
    pub fn disjoint_union(&self, other: &Self, bound: usize) -> Result<Self> {
        let mut dec = self.dec.clone();
        dec.extend(other.dec.iter().cloned());
        let k = self.n();
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(a, b)| (a + k, b + k)));
        Self::new(dec, edges, bound)
    }

    /// Induced subgraph on a vertex subset, decorations untouched.
    pub fn restrict(&self, subset: &BTreeSet<usize>) -> Result<Self> {
        if subset.iter().any(|&v| v >= self.n()) {
            return Err(Error::InvalidInput("subset outside the vertex set".into()));
        }
        let order: Vec<usize> = subset.iter().copied().collect();
        let index: BTreeMap<usize, usize> =
            order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let dec = order.iter().map(|&v| self.dec[v].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter(|(a, b)| subset.contains(a) && subset.contains(b))
            .map(|&(a, b)| (index[&a], index[&b]));
        Self::new(dec, edges.collect::<Vec<_>>(), DEFAULT_VERTEX_BOUND)
    }

    fn block_is_connected(&self, block: &[usize]) -> bool {
        if block.is_empty() {
            return false;
        }
        let inside: BTreeSet<usize> = block.iter().copied().collect();
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([block[0]]);
        seen.insert(block[0]);
        while let Some(v) = queue.pop_front() {
            for &(a, b) in &self.edges {
                let u = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if inside.contains(&u) && seen.insert(u) {
                    queue.push_back(u);
                }
            }
        }
        seen.len() == block.len()
    }

    /// Connected components, as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(a, b) in &self.edges {
                    let u = if a == v {
                        b
                    } else if b == v {
                        a
                    } else {
                        continue;
                    };
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Canonical order: vertex count, then decorations, then edges.
impl Ord for DecoratedGraph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.dec.cmp(&other.dec))
            .then_with(|| self.edges.cmp(&other.edges))
    }
}

impl PartialOrd for DecoratedGraph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DecoratedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G[")?;
        for (i, d) in self.dec.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]{{")?;
        for (i, (a, b)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}-{}", a + 1, b + 1)?;
        }
        write!(f, "}}")
    }
}

/// Disjoint nonempty blocks covering the vertex set; blocks are sorted
/// internally and ordered by least element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        for block in &mut blocks {
            block.sort_unstable();
            if block.is_empty() {
                return Err(Error::InvalidInput("empty block".into()));
            }
            for &v in block.iter() {
                if v >= n || seen[v] {
                    return Err(Error::InvalidInput(
                        "blocks must partition the vertex set".into(),
                    ));
                }
                seen[v] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidInput(
                "blocks must cover the vertex set".into(),
            ));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn singletons(n: usize) -> Self {
        SetPartition {
            blocks: (0..n).map(|v| vec![v]).collect(),
        }
    }

    /// All set partitions of `0..n`, by restricted-growth strings.
    pub fn all(n: usize) -> Vec<SetPartition> {
        if n == 0 {
            return vec![SetPartition { blocks: vec![] }];
        }
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        loop {
            let k = rgs.iter().copied().max().unwrap() + 1;
            let mut blocks = vec![Vec::new(); k];
            for (v, &c) in rgs.iter().enumerate() {
                blocks[c].push(v);
            }
            out.push(SetPartition { blocks });

            // next restricted-growth string
            let mut i = n - 1;
            loop {
                if i == 0 {
                    return out;
                }
                let cap = rgs[..i].iter().copied().max().unwrap() + 1;
                if rgs[i] < cap {
                    rgs[i] += 1;
                    for r in rgs[i + 1..].iter_mut() {
                        *r = 0;
                    }
                    break;
                }
                i -= 1;
            }
        }
    }
}

/// All partitions whose blocks induce connected subgraphs.
pub fn connected_partitions(g: &DecoratedGraph) -> Vec<SetPartition> {
    SetPartition::all(g.n())
        .into_iter()
        .filter(|p| p.blocks().iter().all(|b| g.block_is_connected(b)))
        .collect()
}

/// Quotient graph with explicit per-vertex decorations: one vertex per
/// block decorated by the ·-product over the block, expanded to basis
/// labels by multilinearity; edges are the cross-block edges.
fn quotient_with(
    g: &DecoratedGraph,
    p: &SetPartition,
    labels: &[VLabel],
    spec: &VSpec,
    bound: usize,
) -> Result<LinComb<DecoratedGraph>> {
    let mut class = vec![0usize; g.n()];
    for (bi, block) in p.blocks().iter().enumerate() {
        for &v in block {
            class[v] = bi;
        }
    }
    let mut block_products: Vec<VElem> = Vec::with_capacity(p.blocks().len());
    for block in p.blocks() {
        let mut acc = VElem::term(labels[block[0]].clone());
        for &v in &block[1..] {
            acc = spec.elem_product(&acc, &VElem::term(labels[v].clone()))?;
        }
        block_products.push(acc);
    }
    let mut edges = BTreeSet::new();
    for &(a, b) in g.edges() {
        if class[a] != class[b] {
            edges.insert((class[a].min(class[b]), class[a].max(class[b])));
        }
    }
    let mut out = LinComb::zero();
    for (decs, c) in expand_product(&block_products).iter() {
        out.insert(
            DecoratedGraph::new(decs.clone(), edges.iter().copied(), bound)?,
            c.clone(),
        );
    }
    Ok(out)
}

/// `G/∼` with the original decorations multiplied per block.
pub fn quotient(
    g: &DecoratedGraph,
    p: &SetPartition,
    spec: &VSpec,
    bound: usize,
) -> Result<LinComb<DecoratedGraph>> {
    SetPartition::new(p.blocks().to_vec(), g.n())?;
    quotient_with(g, p, g.decorations(), spec, bound)
}

/// `G|∼`: all vertices, only the intra-block edges, decorations untouched.
pub fn edge_restrict(g: &DecoratedGraph, p: &SetPartition) -> Result<DecoratedGraph> {
    SetPartition::new(p.blocks().to_vec(), g.n())?;
    edge_restrict_with(g, p, g.decorations())
}

fn edge_restrict_with(
    g: &DecoratedGraph,
    p: &SetPartition,
    labels: &[VLabel],
) -> Result<DecoratedGraph> {
    let mut class = vec![0usize; g.n()];
    for (bi, block) in p.blocks().iter().enumerate() {
        for &v in block {
            class[v] = bi;
        }
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| class[a] == class[b])
        .collect();
    DecoratedGraph::new(labels.to_vec(), edges, DEFAULT_VERTEX_BOUND)
}

/// Bipartition coproduct: `Δ(G) = Σ_{V = A ⊔ B} G|A ⊗ G|B`.
pub fn graph_coproduct(
    g: &DecoratedGraph,
    bound: usize,
) -> Result<LinComb<Tensor2<DecoratedGraph, DecoratedGraph>>> {
    let n = g.n();
    if n > bound {
        return Err(Error::SizeExceeded { n, bound });
    }
    let mut out = LinComb::zero();
    for mask in 0u64..(1u64 << n) {
        let a: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let b: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) == 0).collect();
        out.insert(
            Tensor2(g.restrict(&a)?, g.restrict(&b)?),
            Scalar::one(),
        );
    }
    Ok(out)
}

/// Contraction–extraction coproduct:
/// `δ(G) = Σ_{∼ connected} G/∼ ⊗ G|∼`, the quotient decorated by the
/// ·-products of first Sweedler legs and the restriction by second legs,
/// everything expanded by multilinearity in the vertices.
pub fn graph_delta(
    g: &DecoratedGraph,
    ctx: &QShContext,
    bound: usize,
) -> Result<LinComb<Tensor2<DecoratedGraph, DecoratedGraph>>> {
    ctx.require_bicommutative("the coproduct δ on graphs")?;
    let n = g.n();
    if n > bound {
        return Err(Error::SizeExceeded { n, bound });
    }
    let spec = ctx.spec();
    let per_vertex: Vec<LinComb<Tensor2<VLabel, VLabel>>> = g
        .decorations()
        .iter()
        .map(|d| spec.coproduct(d))
        .collect::<Result<_>>()?;
    let sweedler = expand_product(&per_vertex);
    let partitions = connected_partitions(g);
    let mut out = LinComb::zero();
    for (choice, c) in sweedler.iter() {
        let firsts: Vec<VLabel> = choice.iter().map(|t| t.0.clone()).collect();
        let seconds: Vec<VLabel> = choice.iter().map(|t| t.1.clone()).collect();
        for p in &partitions {
            let quotients = quotient_with(g, p, &firsts, spec, bound)?;
            let restricted = edge_restrict_with(g, p, &seconds)?;
            for (q, cq) in quotients.iter() {
                out.insert(
                    Tensor2(q.clone(), restricted.clone()),
                    c.clone() * cq.clone(),
                );
            }
        }
    }
    Ok(out)
}

/// ε_δ on graphs: the product of vertex counits on edgeless graphs, 0
/// otherwise.
pub fn graph_eps_delta(g: &DecoratedGraph, ctx: &QShContext) -> Result<Scalar> {
    if g.has_edges() {
        return Ok(Scalar::zero());
    }
    let mut acc = Scalar::one();
    for d in g.decorations() {
        acc *= ctx.spec().counit(d)?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// Coaction into `uV`: primes every decoration, multiplies the second
/// legs over all vertices; the empty graph goes to `empty ⊗ 1_uV`.
pub fn graph_coaction(
    g: &DecoratedGraph,
    ctx: &QShContext,
) -> Result<LinComb<Tensor2<DecoratedGraph, VLabel>>> {
    ctx.require_bicommutative("the coaction ρ on graphs")?;
    if g.n() == 0 {
        return Ok(LinComb::term(Tensor2(DecoratedGraph::empty(), VLabel::Unit)));
    }
    let spec = ctx.spec();
    let per_vertex: Vec<LinComb<Tensor2<VLabel, VLabel>>> = g
        .decorations()
        .iter()
        .map(|d| spec.coproduct(d))
        .collect::<Result<_>>()?;
    let mut out = LinComb::zero();
    for (choice, c) in expand_product(&per_vertex).iter() {
        let firsts: Vec<VLabel> = choice.iter().map(|t| t.0.clone()).collect();
        let mut second = VElem::term(choice[0].1.clone());
        for t in &choice[1..] {
            second = spec.elem_product(&second, &VElem::term(t.1.clone()))?;
        }
        let first_graph =
            DecoratedGraph::new(firsts, g.edges().iter().copied(), DEFAULT_VERTEX_BOUND)?;
        for (l, cs) in second.iter() {
            out.insert(
                Tensor2(first_graph.clone(), l.clone()),
                c.clone() * cs.clone(),
            );
        }
    }
    Ok(out)
}

/// Partitions of the vertex set into independent (edge-free) blocks:
/// these index proper colorations, ordered blocks being color classes.
fn independent_partitions(g: &DecoratedGraph) -> Vec<SetPartition> {
    SetPartition::all(g.n())
        .into_iter()
        .filter(|p| {
            p.blocks().iter().all(|block| {
                let inside: BTreeSet<usize> = block.iter().copied().collect();
                !g.edges()
                    .iter()
                    .any(|(a, b)| inside.contains(a) && inside.contains(b))
            })
        })
        .collect()
}

fn permutations_of(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_permutation(k, &mut |p| out.push(p.to_vec()));
    out
}

/// The word image under the unique double-bialgebra morphism: one word
/// per packed valid coloration, letter `i` the ·-product of decorations
/// in color class `i`.
pub fn phi1_graph(g: &DecoratedGraph, ctx: &QShContext, bound: usize) -> Result<LinComb<Word>> {
    ctx.require_bicommutative("the coloration morphism")?;
    let n = g.n();
    if n > bound {
        return Err(Error::SizeExceeded { n, bound });
    }
    let spec = ctx.spec();
    let mut out = LinComb::zero();
    for p in independent_partitions(g) {
        let k = p.blocks().len();
        let mut block_products: Vec<VElem> = Vec::with_capacity(k);
        for block in p.blocks() {
            let mut acc = VElem::term(g.decorations()[block[0]].clone());
            for &v in &block[1..] {
                acc = spec.elem_product(&acc, &VElem::term(g.decorations()[v].clone()))?;
            }
            block_products.push(acc);
        }
        for order in permutations_of(k) {
            let ordered: Vec<VElem> = order
                .iter()
                .map(|&i| block_products[i].clone())
                .collect();
            for (letters, c) in expand_product(&ordered).iter() {
                out.insert(Word::new(letters.clone()).expect("base letters"), c.clone());
            }
        }
    }
    Ok(out)
}

/// `Υ_V ∘ Φ₁`: the chromatic polynomial of the decorated graph.
pub fn chromatic_polynomial(
    g: &DecoratedGraph,
    ctx: &QShContext,
    bound: usize,
) -> Result<Polynomial> {
    upsilon_to_poly(&phi1_graph(g, ctx, bound)?, ctx.spec())
}

fn chrom_rec(n: usize, edges: &BTreeSet<(usize, usize)>) -> Polynomial {
    match edges.iter().next().copied() {
        None => {
            // X^n on the edgeless graph
            let mut coeffs = vec![Scalar::zero(); n + 1];
            coeffs[n] = Scalar::one();
            Polynomial::from_coeffs(coeffs)
        }
        Some((u, v)) => {
            let mut deleted = edges.clone();
            deleted.remove(&(u, v));
            let without = chrom_rec(n, &deleted);

            // contract v into u, relabel w > v down by one
            let mut contracted = BTreeSet::new();
            for &(a, b) in &deleted {
                let map = |w: usize| {
                    let w = if w == v { u } else { w };
                    if w > v {
                        w - 1
                    } else {
                        w
                    }
                };
                let (x, y) = (map(a), map(b));
                if x != y {
                    contracted.insert((x.min(y), x.max(y)));
                }
            }
            let merged = chrom_rec(n - 1, &contracted);
            &without - &merged
        }
    }
}

/// Classical deletion–contraction recursion, decorations ignored. An
/// independent oracle for the chromatic specialization.
pub fn chromatic_deletion_contraction(g: &DecoratedGraph, bound: usize) -> Result<Polynomial> {
    let n = g.n();
    if n > bound {
        return Err(Error::SizeExceeded { n, bound });
    }
    Ok(chrom_rec(n, g.edges()))
}

/// Brute-force count of proper colorings with at most `q` colors.
pub fn count_proper_colorings(g: &DecoratedGraph, q: usize) -> u64 {
    let n = g.n();
    if n == 0 {
        return 1;
    }
    if q == 0 {
        return 0;
    }
    let mut count = 0u64;
    let mut coloring = vec![0usize; n];
    loop {
        if g.edges().iter().all(|&(a, b)| coloring[a] != coloring[b]) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            coloring[i] += 1;
            if coloring[i] < q {
                break;
            }
            coloring[i] = 0;
            i += 1;
        }
    }
}

#[derive(Deserialize)]
struct VertexFile {
    id: u64,
    dec: String,
}

#[derive(Deserialize)]
struct GraphFile {
    vertices: Vec<VertexFile>,
    #[serde(default)]
    edges: Vec<(u64, u64)>,
}

/// Parses the graph JSON format. Decorations may be linear combinations
/// of labels and are expanded by multilinearity immediately.
pub fn graph_from_json(
    text: &str,
    spec: &VSpec,
    bound: usize,
) -> Result<LinComb<DecoratedGraph>> {
    let file: GraphFile = serde_json::from_str(text)?;
    let mut index = BTreeMap::new();
    let mut decs: Vec<VElem> = Vec::new();
    for v in &file.vertices {
        if index.insert(v.id, index.len()).is_some() {
            return Err(Error::InvalidInput(format!("duplicate vertex id {}", v.id)));
        }
        decs.push(parse_label_lincomb(&v.dec, spec)?);
    }
    let mut edges = Vec::new();
    for &(a, b) in &file.edges {
        let (ia, ib) = match (index.get(&a), index.get(&b)) {
            (Some(&ia), Some(&ib)) => (ia, ib),
            _ => {
                return Err(Error::InvalidInput(format!(
                    "edge ({a},{b}) references an unknown vertex"
                )))
            }
        };
        edges.push((ia, ib));
    }
    let mut out = LinComb::zero();
    for (labels, c) in expand_product(&decs).iter() {
        out.insert(
            DecoratedGraph::new(labels.clone(), edges.iter().copied(), bound)?,
            c.clone(),
        );
    }
    Ok(out)
}

/// All decorated graphs on exactly `n` vertices over the given letters,
/// one representative per isomorphism class.
pub fn enumerate_graphs(n: usize, letters: &[VLabel], bound: usize) -> Result<Vec<DecoratedGraph>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let mut seen = BTreeSet::new();
    let mut decs = vec![0usize; n];
    loop {
        let labels: Vec<VLabel> = decs.iter().map(|&i| letters[i].clone()).collect();
        for mask in 0u64..(1u64 << pairs.len()) {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e);
            seen.insert(DecoratedGraph::new(labels.clone(), edges, bound)?);
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(seen.into_iter().collect());
            }
            decs[i] += 1;
            if decs[i] < letters.len() {
                break;
            }
            decs[i] = 0;
            i += 1;
        }
    }
}

/// The decorated-graph bialgebra as a host for the morphism engine.
pub struct GraphHost {
    ctx: QShContext,
    vertex_bound: usize,
}

impl GraphHost {
    pub fn new(ctx: QShContext, vertex_bound: usize) -> Self {
        GraphHost { ctx, vertex_bound }
    }

    pub fn vertex_bound(&self) -> usize {
        self.vertex_bound
    }
}

impl Host for GraphHost {
    type Term = DecoratedGraph;

    fn name(&self) -> &str {
        "graphs"
    }

    fn spec(&self) -> &VSpec {
        self.ctx.spec()
    }

    fn qsh_context(&self) -> &QShContext {
        &self.ctx
    }

    fn unit(&self) -> DecoratedGraph {
        DecoratedGraph::empty()
    }

    fn product(&self, a: &DecoratedGraph, b: &DecoratedGraph) -> Result<LinComb<DecoratedGraph>> {
        Ok(LinComb::term(a.disjoint_union(b, self.vertex_bound)?))
    }

    fn coproduct(
        &self,
        t: &DecoratedGraph,
    ) -> Result<LinComb<Tensor2<DecoratedGraph, DecoratedGraph>>> {
        graph_coproduct(t, self.vertex_bound)
    }

    fn delta(
        &self,
        t: &DecoratedGraph,
    ) -> Result<LinComb<Tensor2<DecoratedGraph, DecoratedGraph>>> {
        graph_delta(t, &self.ctx, self.vertex_bound)
    }

    fn coaction(&self, t: &DecoratedGraph) -> Result<LinComb<Tensor2<DecoratedGraph, VLabel>>> {
        graph_coaction(t, &self.ctx)
    }

    fn counit(&self, t: &DecoratedGraph) -> Scalar {
        if t.n() == 0 {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    fn eps_delta(&self, t: &DecoratedGraph) -> Result<Scalar> {
        graph_eps_delta(t, &self.ctx)
    }

    fn bound(&self, t: &DecoratedGraph) -> usize {
        t.n()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn tok(s: &str) -> VLabel {
        VLabel::tok(s)
    }

    fn dg(decs: &[&str], edges: &[(usize, usize)]) -> DecoratedGraph {
        DecoratedGraph::new(
            decs.iter().map(|s| tok(s)).collect(),
            edges.iter().copied(),
            DEFAULT_VERTEX_BOUND,
        )
        .unwrap()
    }

    fn triv_ctx() -> QShContext {
        QShContext::new(VSpec::trivial_k())
    }

    fn free_ctx() -> QShContext {
        QShContext::new(VSpec::free_comm())
    }

    #[test]
    fn canonical_form_is_isomorphism_invariant() {
        let t1 = dg(&["e", "e", "e"], &[(0, 1), (1, 2), (0, 2)]);
        let t2 = dg(&["e", "e", "e"], &[(2, 0), (1, 0), (2, 1)]);
        assert_eq!(t1, t2);

        let p1 = dg(&["a", "b"], &[]);
        let p2 = dg(&["b", "a"], &[]);
        assert_eq!(p1, p2);

        let path1 = dg(&["a", "b", "c"], &[(0, 1), (1, 2)]);
        let path2 = dg(&["c", "b", "a"], &[(0, 1), (1, 2)]);
        assert_eq!(path1, path2);
    }

    #[test]
    fn bound_is_enforced() {
        let labels = vec![tok("e"); 11];
        assert!(matches!(
            DecoratedGraph::new(labels, [], DEFAULT_VERTEX_BOUND),
            Err(Error::SizeExceeded { .. })
        ));
    }

    #[test]
    fn product_laws() {
        let g = dg(&["a", "b"], &[(0, 1)]);
        let h = dg(&["c"], &[]);
        let gh = g.disjoint_union(&h, DEFAULT_VERTEX_BOUND).unwrap();
        let hg = h.disjoint_union(&g, DEFAULT_VERTEX_BOUND).unwrap();
        assert_eq!(gh, hg);
        assert_eq!(gh.n(), 3);
        assert_eq!(
            g.disjoint_union(&DecoratedGraph::empty(), DEFAULT_VERTEX_BOUND)
                .unwrap(),
            g
        );
    }

    #[test]
    fn restrict_examples() {
        let triangle = dg(&["e", "e", "e"], &[(0, 1), (1, 2), (0, 2)]);
        let all: BTreeSet<usize> = [0, 1, 2].into();
        assert_eq!(triangle.restrict(&all).unwrap(), triangle);
        assert_eq!(
            triangle.restrict(&BTreeSet::new()).unwrap(),
            DecoratedGraph::empty()
        );
        let two: BTreeSet<usize> = [0, 1].into();
        assert_eq!(triangle.restrict(&two).unwrap(), dg(&["e", "e"], &[(0, 1)]));
        let bad: BTreeSet<usize> = [5].into();
        assert!(triangle.restrict(&bad).is_err());
    }

    #[test]
    fn coproduct_of_path_has_the_eight_terms() {
        // Δ(v1–v2–v3) with distinct decorations a, b, c (edges a–b, b–c)
        let path = dg(&["a", "b", "c"], &[(0, 1), (1, 2)]);
        let got = graph_coproduct(&path, DEFAULT_VERTEX_BOUND).unwrap();
        let empty = DecoratedGraph::empty();
        let mut want = LinComb::zero();
        want.insert(Tensor2(path.clone(), empty.clone()), int(1));
        want.insert(Tensor2(empty.clone(), path.clone()), int(1));
        want.insert(Tensor2(dg(&["a", "b"], &[(0, 1)]), dg(&["c"], &[])), int(1));
        want.insert(Tensor2(dg(&["b", "c"], &[(0, 1)]), dg(&["a"], &[])), int(1));
        want.insert(Tensor2(dg(&["a", "c"], &[]), dg(&["b"], &[])), int(1));
        want.insert(Tensor2(dg(&["c"], &[]), dg(&["a", "b"], &[(0, 1)])), int(1));
        want.insert(Tensor2(dg(&["a"], &[]), dg(&["b", "c"], &[(0, 1)])), int(1));
        want.insert(Tensor2(dg(&["b"], &[]), dg(&["a", "c"], &[])), int(1));
        assert_eq!(got, want);
    }

    #[test]
    fn coproduct_of_vertex_and_empty() {
        let v = dg(&["a"], &[]);
        let got = graph_coproduct(&v, DEFAULT_VERTEX_BOUND).unwrap();
        assert_eq!(got.num_terms(), 2);
        let got_empty = graph_coproduct(&DecoratedGraph::empty(), DEFAULT_VERTEX_BOUND).unwrap();
        assert_eq!(
            got_empty,
            LinComb::term(Tensor2(DecoratedGraph::empty(), DecoratedGraph::empty()))
        );
    }

    #[test]
    fn connected_partitions_of_path() {
        let path = dg(&["a", "b", "c"], &[(0, 1), (1, 2)]);
        // canonical form may relabel; count is isomorphism-invariant
        assert_eq!(connected_partitions(&path).len(), 4);
        let vertex = dg(&["a"], &[]);
        assert_eq!(connected_partitions(&vertex).len(), 1);
        let two = dg(&["a", "b"], &[]);
        assert_eq!(connected_partitions(&two).len(), 1);
    }

    #[test]
    fn quotient_and_edge_restrict_examples() {
        let spec = VSpec::free_comm();
        let edge = dg(&["a", "b"], &[(0, 1)]);
        let merged = SetPartition::new(vec![vec![0, 1]], 2).unwrap();
        let q = quotient(&edge, &merged, &spec, DEFAULT_VERTEX_BOUND).unwrap();
        assert_eq!(q, LinComb::term(dg(&["a*b"], &[])));

        let singles = SetPartition::singletons(2);
        let q2 = quotient(&edge, &singles, &spec, DEFAULT_VERTEX_BOUND).unwrap();
        assert_eq!(q2, LinComb::term(edge.clone()));

        let path = dg(&["a", "b", "c"], &[(0, 1), (1, 2)]);
        // one merged pair must induce a connected block to be meaningful;
        // edge_restrict itself accepts any partition
        for p in connected_partitions(&path) {
            if p.blocks().len() == 2 {
                let r = edge_restrict(&path, &p).unwrap();
                assert_eq!(r.edges().len(), 1);
                assert_eq!(r.n(), 3);
            }
        }
        let bad = SetPartition::new(vec![vec![0]], 1).unwrap();
        assert!(edge_restrict(&path, &bad).is_err());
    }

    #[test]
    fn delta_of_path_has_the_four_partition_terms() {
        let ctx = free_ctx();
        let path = dg(&["v1", "v2", "v3"], &[(0, 1), (1, 2)]);
        let got = graph_delta(&path, &ctx, DEFAULT_VERTEX_BOUND).unwrap();
        // group-like base: primes equal the original decorations
        let mut want = LinComb::zero();
        want.insert(
            Tensor2(path.clone(), dg(&["v1", "v2", "v3"], &[])),
            int(1),
        );
        want.insert(Tensor2(dg(&["v1*v2*v3"], &[]), path.clone()), int(1));
        want.insert(
            Tensor2(
                dg(&["v1*v2", "v3"], &[(0, 1)]),
                dg(&["v1", "v2", "v3"], &[(0, 1)]),
            ),
            int(1),
        );
        want.insert(
            Tensor2(
                dg(&["v2*v3", "v1"], &[(0, 1)]),
                dg(&["v2", "v3", "v1"], &[(0, 1)]),
            ),
            int(1),
        );
        assert_eq!(got, want);
    }

    #[test]
    fn delta_of_single_vertex() {
        let ctx = free_ctx();
        let v = dg(&["v1"], &[]);
        let got = graph_delta(&v, &ctx, DEFAULT_VERTEX_BOUND).unwrap();
        assert_eq!(got, LinComb::term(Tensor2(v.clone(), v)));
    }

    #[test]
    fn delta_counit_law() {
        let ctx = triv_ctx();
        for g in enumerate_graphs(3, &[tok("e")], DEFAULT_VERTEX_BOUND).unwrap() {
            let d = graph_delta(&g, &ctx, DEFAULT_VERTEX_BOUND).unwrap();
            let mut back = LinComb::zero();
            for (Tensor2(a, b), c) in d.iter() {
                back.insert(b.clone(), c.clone() * graph_eps_delta(a, &ctx).unwrap());
            }
            assert_eq!(back, LinComb::term(g.clone()), "at {g}");
        }
    }

    #[test]
    fn eps_delta_rules() {
        let ctx = QShContext::new(VSpec::nat_semigroup());
        let edgeless = DecoratedGraph::new(
            vec![tok("1"), tok("2")],
            [],
            DEFAULT_VERTEX_BOUND,
        )
        .unwrap();
        assert_eq!(graph_eps_delta(&edgeless, &ctx).unwrap(), int(1));
        let edge = DecoratedGraph::new(
            vec![tok("1"), tok("2")],
            [(0, 1)],
            DEFAULT_VERTEX_BOUND,
        )
        .unwrap();
        assert_eq!(graph_eps_delta(&edge, &ctx).unwrap(), int(0));
        assert_eq!(
            graph_eps_delta(&DecoratedGraph::empty(), &ctx).unwrap(),
            int(1)
        );
    }

    #[test]
    fn coaction_examples() {
        let nat = QShContext::new(VSpec::nat_semigroup());
        let path = DecoratedGraph::new(
            vec![tok("1"), tok("2"), tok("3")],
            [(0, 1), (1, 2)],
            DEFAULT_VERTEX_BOUND,
        )
        .unwrap();
        let got = graph_coaction(&path, &nat).unwrap();
        assert_eq!(got, LinComb::term(Tensor2(path.clone(), tok("6"))));

        assert_eq!(
            graph_coaction(&DecoratedGraph::empty(), &nat).unwrap(),
            LinComb::term(Tensor2(DecoratedGraph::empty(), VLabel::Unit))
        );

        let triv = triv_ctx();
        let g = dg(&["e", "e"], &[(0, 1)]);
        assert_eq!(
            graph_coaction(&g, &triv).unwrap(),
            LinComb::term(Tensor2(g.clone(), tok("e")))
        );
    }

    #[test]
    fn phi1_of_edge_path_triangle() {
        let ctx = free_ctx();
        let spec = ctx.spec().clone();
        let parse = |s: &str| crate::expr::parse_word_lincomb(s, &spec).unwrap();

        let edge = dg(&["v1", "v2"], &[(0, 1)]);
        assert_eq!(
            phi1_graph(&edge, &ctx, DEFAULT_VERTEX_BOUND).unwrap(),
            parse("[v1,v2] + [v2,v1]")
        );

        let path = dg(&["v1", "v2", "v3"], &[(0, 1), (1, 2)]);
        let want = parse(
            "[v1,v2,v3] + [v1,v3,v2] + [v2,v1,v3] + [v2,v3,v1] + [v3,v1,v2] + [v3,v2,v1] \
             + [v1*v3,v2] + [v2,v1*v3]",
        );
        assert_eq!(phi1_graph(&path, &ctx, DEFAULT_VERTEX_BOUND).unwrap(), want);

        let triangle = dg(&["v1", "v2", "v3"], &[(0, 1), (1, 2), (0, 2)]);
        let want = parse(
            "[v1,v2,v3] + [v1,v3,v2] + [v2,v1,v3] + [v2,v3,v1] + [v3,v1,v2] + [v3,v2,v1]",
        );
        assert_eq!(
            phi1_graph(&triangle, &ctx, DEFAULT_VERTEX_BOUND).unwrap(),
            want
        );
    }

    #[test]
    fn chromatic_examples() {
        let ctx = triv_ctx();
        let vertex = dg(&["e"], &[]);
        assert_eq!(
            chromatic_polynomial(&vertex, &ctx, DEFAULT_VERTEX_BOUND).unwrap(),
            Polynomial::x()
        );

        let triangle = dg(&["e", "e", "e"], &[(0, 1), (1, 2), (0, 2)]);
        let got = chromatic_polynomial(&triangle, &ctx, DEFAULT_VERTEX_BOUND).unwrap();
        assert_eq!(
            got,
            chromatic_deletion_contraction(&triangle, DEFAULT_VERTEX_BOUND).unwrap()
        );
        assert_eq!(got.eval(&int(3)), int(6));
        assert_eq!(got.to_string(), "X^3 - 3*X^2 + 2*X");

        let path = dg(&["e", "e", "e"], &[(0, 1), (1, 2)]);
        let got = chromatic_polynomial(&path, &ctx, DEFAULT_VERTEX_BOUND).unwrap();
        // X(X-1)^2
        let xm1 = &Polynomial::x() - &Polynomial::one();
        assert_eq!(got, &(&Polynomial::x() * &xm1) * &xm1);
        assert!(got.is_monic());
    }

    #[test]
    fn deletion_contraction_base_cases() {
        let edgeless = dg(&["e", "e", "e"], &[]);
        assert_eq!(
            chromatic_deletion_contraction(&edgeless, DEFAULT_VERTEX_BOUND)
                .unwrap()
                .to_string(),
            "X^3"
        );
        let edge = dg(&["e", "e"], &[(0, 1)]);
        assert_eq!(
            chromatic_deletion_contraction(&edge, DEFAULT_VERTEX_BOUND)
                .unwrap()
                .to_string(),
            "X^2 - X"
        );
    }

    #[test]
    fn coloring_count_matches_evaluation() {
        let ctx = triv_ctx();
        for g in enumerate_graphs(3, &[tok("e")], DEFAULT_VERTEX_BOUND).unwrap() {
            let p = chromatic_polynomial(&g, &ctx, DEFAULT_VERTEX_BOUND).unwrap();
            for q in 0..=3usize {
                assert_eq!(
                    p.eval(&int(q as i64)),
                    int(count_proper_colorings(&g, q) as i64),
                    "graph {g}, q={q}"
                );
            }
        }
    }

    #[test]
    fn json_parse_and_expansion() {
        let spec = VSpec::free_comm();
        let text = r#"{
            "vertices": [{"id": 1, "dec": "v1"}, {"id": 2, "dec": "v2 + 2*v3"}],
            "edges": [[1, 2]]
        }"#;
        let lc = graph_from_json(text, &spec, DEFAULT_VERTEX_BOUND).unwrap();
        assert_eq!(lc.num_terms(), 2);
        assert_eq!(lc.coeff(&dg(&["v1", "v2"], &[(0, 1)])), int(1));
        assert_eq!(lc.coeff(&dg(&["v1", "v3"], &[(0, 1)])), int(2));

        assert!(graph_from_json(
            r#"{"vertices": [{"id":1,"dec":"v1"}], "edges": [[1,1]]}"#,
            &spec,
            DEFAULT_VERTEX_BOUND
        )
        .is_err());
    }

    #[test]
    fn enumerate_counts_unlabeled_graphs() {
        // 1, 1, 2, 4, 11 unlabeled simple graphs on 0..=4 vertices
        for (n, want) in [(0usize, 1usize), (1, 1), (2, 2), (3, 4), (4, 11)] {
            let got = enumerate_graphs(n, &[tok("e")], DEFAULT_VERTEX_BOUND)
                .unwrap()
                .len();
            assert_eq!(got, want, "n={n}");
        }
    }
}
