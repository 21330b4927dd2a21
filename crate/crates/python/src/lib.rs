//! Python bindings: a thin string-in/string-out wrapper around the
//! kernel, exposing the base-bialgebra presets, the word operations, the
//! graph operations and the verification suite.

use std::rc::Rc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use qsh_core::error::Error;
use qsh_core::expr::parse_word_lincomb;
use qsh_core::graph::{
    chromatic_deletion_contraction, chromatic_polynomial, graph_coproduct, graph_delta,
    graph_from_json, phi1_graph, GraphHost, DEFAULT_VERTEX_BOUND,
};
use qsh_core::harness::{run_axiom_suite, RunConfig};
use qsh_core::morphism::{
    hoffman_theta_inv_lc, hoffman_theta_lc, upsilon_to_poly, Character, MorphismEval,
};
use qsh_core::poly::hilbert_poly;
use qsh_core::quasishuffle::{
    antipode_lc, coaction_word, deconcatenate, delta_word, eps_delta_word, quasishuffle_lc,
    shuffle_lc, QShContext,
};
use qsh_core::vspec::VSpec;

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A base bialgebra together with the operations it parametrizes.
#[pyclass]
struct Spec {
    inner: VSpec,
}

impl Spec {
    fn ctx(&self) -> QShContext {
        QShContext::new(self.inner.clone())
    }
}

#[pymethods]
impl Spec {
    /// Accepts a preset name (`trivial-k`, `nat-semigroup`, `z2-mult`,
    /// `free-comm`), a JSON file path, or inline JSON text.
    #[new]
    fn new(source: &str) -> PyResult<Self> {
        let inner = if source.trim_start().starts_with('{') {
            VSpec::from_json(source).map_err(py_err)?
        } else {
            VSpec::load(source).map_err(py_err)?
        };
        Ok(Spec { inner })
    }

    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    /// Quasishuffle product of two word expressions.
    fn prod(&self, a: &str, b: &str) -> PyResult<String> {
        let ctx = self.ctx();
        let x = parse_word_lincomb(a, ctx.spec()).map_err(py_err)?;
        let y = parse_word_lincomb(b, ctx.spec()).map_err(py_err)?;
        Ok(quasishuffle_lc(&x, &y, &ctx).map_err(py_err)?.to_string())
    }

    /// Shuffle product of two word expressions.
    fn shuffle(&self, a: &str, b: &str) -> PyResult<String> {
        let ctx = self.ctx();
        let x = parse_word_lincomb(a, ctx.spec()).map_err(py_err)?;
        let y = parse_word_lincomb(b, ctx.spec()).map_err(py_err)?;
        Ok(shuffle_lc(&x, &y).to_string())
    }

    fn decat(&self, expr: &str) -> PyResult<String> {
        let ctx = self.ctx();
        let x = parse_word_lincomb(expr, ctx.spec()).map_err(py_err)?;
        Ok(x.map_terms(deconcatenate).to_string())
    }

    fn delta(&self, expr: &str) -> PyResult<String> {
        let ctx = self.ctx();
        let x = parse_word_lincomb(expr, ctx.spec()).map_err(py_err)?;
        Ok(x.try_map_terms(|w| delta_word(w, &ctx))
            .map_err(py_err)?
            .to_string())
    }

    fn eps(&self, expr: &str) -> PyResult<String> {
        let ctx = self.ctx();
        let x = parse_word_lincomb(expr, ctx.spec()).map_err(py_err)?;
        Ok(x.try_fold_scalar(|w| eps_delta_word(w, &ctx))
            .map_err(py_err)?
            .to_string())
    }

    fn rho(&self, expr: &str) -> PyResult<String> {
        let ctx = self.ctx();
        let x = parse_word_lincomb(expr, ctx.spec()).map_err(py_err)?;
        Ok(x.try_map_terms(|w| coaction_word(w, &ctx))
            .map_err(py_err)?
            .to_string())
    }

    fn antipode(&self, expr: &str) -> PyResult<String> {
        let ctx = self.ctx();
        let x = parse_word_lincomb(expr, ctx.spec()).map_err(py_err)?;
        Ok(antipode_lc(&x, &ctx).map_err(py_err)?.to_string())
    }

    #[pyo3(signature = (expr, inverse = false))]
    fn hoffman(&self, expr: &str, inverse: bool) -> PyResult<String> {
        let ctx = self.ctx();
        let x = parse_word_lincomb(expr, ctx.spec()).map_err(py_err)?;
        let out = if inverse {
            hoffman_theta_inv_lc(&x, &ctx)
        } else {
            hoffman_theta_lc(&x, &ctx)
        };
        Ok(out.map_err(py_err)?.to_string())
    }

    fn upsilon(&self, expr: &str) -> PyResult<String> {
        let ctx = self.ctx();
        let x = parse_word_lincomb(expr, ctx.spec()).map_err(py_err)?;
        Ok(upsilon_to_poly(&x, ctx.spec()).map_err(py_err)?.to_string())
    }

    /// Universal morphism on the word host with the counit character.
    fn phi(&self, expr: &str) -> PyResult<String> {
        let ctx = self.ctx();
        let host = Rc::new(qsh_core::host::WordHost::new(ctx.clone()));
        let phi = MorphismEval::universal(&host, ctx.clone(), &Character::eps_delta(&host));
        let x = parse_word_lincomb(expr, ctx.spec()).map_err(py_err)?;
        Ok(phi.eval_lc(&x).map_err(py_err)?.to_string())
    }

    /// Universal morphism on the graph host (graph JSON input).
    fn phi_graph(&self, graph_json: &str) -> PyResult<String> {
        let ctx = self.ctx();
        let host = Rc::new(GraphHost::new(ctx.clone(), DEFAULT_VERTEX_BOUND));
        let phi = MorphismEval::phi1(&host, ctx.clone());
        let graphs =
            graph_from_json(graph_json, ctx.spec(), DEFAULT_VERTEX_BOUND).map_err(py_err)?;
        Ok(phi.eval_lc(&graphs).map_err(py_err)?.to_string())
    }

    fn graph_delta(&self, graph_json: &str) -> PyResult<String> {
        let ctx = self.ctx();
        let graphs =
            graph_from_json(graph_json, ctx.spec(), DEFAULT_VERTEX_BOUND).map_err(py_err)?;
        Ok(graphs
            .try_map_terms(|g| graph_delta(g, &ctx, DEFAULT_VERTEX_BOUND))
            .map_err(py_err)?
            .to_string())
    }

    fn graph_coprod(&self, graph_json: &str) -> PyResult<String> {
        let ctx = self.ctx();
        let graphs =
            graph_from_json(graph_json, ctx.spec(), DEFAULT_VERTEX_BOUND).map_err(py_err)?;
        Ok(graphs
            .try_map_terms(|g| graph_coproduct(g, DEFAULT_VERTEX_BOUND))
            .map_err(py_err)?
            .to_string())
    }

    fn graph_phi1(&self, graph_json: &str) -> PyResult<String> {
        let ctx = self.ctx();
        let graphs =
            graph_from_json(graph_json, ctx.spec(), DEFAULT_VERTEX_BOUND).map_err(py_err)?;
        Ok(graphs
            .try_map_terms(|g| phi1_graph(g, &ctx, DEFAULT_VERTEX_BOUND))
            .map_err(py_err)?
            .to_string())
    }

    fn chromatic(&self, graph_json: &str) -> PyResult<String> {
        let ctx = self.ctx();
        let graphs =
            graph_from_json(graph_json, ctx.spec(), DEFAULT_VERTEX_BOUND).map_err(py_err)?;
        let mut acc = qsh_core::poly::Polynomial::zero();
        for (g, c) in graphs.iter() {
            acc = &acc
                + &chromatic_polynomial(g, &ctx, DEFAULT_VERTEX_BOUND)
                    .map_err(py_err)?
                    .scale(c);
        }
        Ok(acc.to_string())
    }

    fn chromatic_oracle(&self, graph_json: &str) -> PyResult<String> {
        let ctx = self.ctx();
        let graphs =
            graph_from_json(graph_json, ctx.spec(), DEFAULT_VERTEX_BOUND).map_err(py_err)?;
        let mut acc = qsh_core::poly::Polynomial::zero();
        for (g, c) in graphs.iter() {
            acc = &acc
                + &chromatic_deletion_contraction(g, DEFAULT_VERTEX_BOUND)
                    .map_err(py_err)?
                    .scale(c);
        }
        Ok(acc.to_string())
    }

    /// Runs the verification suite; returns (law, pass) pairs.
    #[pyo3(signature = (max_len = 3, max_vertices = 3, seed = 0))]
    fn check(&self, max_len: usize, max_vertices: usize, seed: u64) -> PyResult<Vec<(String, bool)>> {
        let cfg = RunConfig {
            seed,
            max_word_len: max_len,
            max_vertices,
            trilinear_max_vertices: max_vertices.min(3),
            ..RunConfig::new(self.inner.clone())
        };
        let report = run_axiom_suite(&cfg).map_err(py_err)?;
        Ok(report
            .entries
            .into_iter()
            .map(|e| (e.law, e.pass))
            .collect())
    }
}

/// Falling-factorial polynomial `X(X-1)…(X-n+1)/n!` as text.
#[pyfunction]
fn hilbert(n: usize) -> String {
    hilbert_poly(n).to_string()
}

#[pyfunction]
fn presets() -> Vec<String> {
    ["trivial-k", "nat-semigroup", "z2-mult", "free-comm"]
        .iter()
        .map(|s| s.to_string())
        .collect()
}

#[pymodule]
fn qshpy(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Spec>()?;
    m.add_function(wrap_pyfunction!(hilbert, m)?)?;
    m.add_function(wrap_pyfunction!(presets, m)?)?;
    Ok(())
}
