//! Perron roots of adjacency matrices by power iteration.
//!
//! Each connected component is iterated separately from the all-ones
//! vector, using `A + I` so that the `−ρ` eigenvalue of a bipartite
//! component cannot stall convergence. The reported root is the largest
//! component root; the Rayleigh quotient of the returned vector is a
//! certified lower bound on `ρ(G)`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

/// Tolerances for the spectral routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralConfig {
    /// Stop once successive Rayleigh quotients differ by less than this.
    pub tol: f64,
    /// Roots closer than this compare as equal.
    pub tie_tol: f64,
    pub max_iter: usize,
}

impl Default for SpectralConfig {
    fn default() -> Self {
        SpectralConfig { tol: 1e-12, tie_tol: 1e-9, max_iter: 1_000_000 }
    }
}

impl SpectralConfig {
    /// Eigen-equation residual required on top of the Rayleigh increment.
    fn residual_tol(&self, n: usize) -> f64 {
        100.0 * self.tol * n.max(1) as f64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    pub rho: f64,
    /// Perron vector of the winning component, max entry 1, zero elsewhere.
    pub vector: Vec<f64>,
    /// `max_v |ρ x_v − Σ_{u∼v} x_u|`.
    pub residual: f64,
    /// Rayleigh quotient of `vector`; never above `rho`.
    pub certified_lower: f64,
    pub converged: bool,
    pub iterations: usize,
}

/// Power iteration on one component. Returns (rho, vector on `members`,
/// converged, iterations).
fn component_root(g: &Graph, members: &[usize], index: &[usize], cfg: &SpectralConfig) -> (f64, Vec<f64>, bool, usize) {
    let k = members.len();
    if k == 1 {
        return (0.0, vec![1.0], true, 0);
    }
    let mut x = vec![1.0; k];
    let mut ax = vec![0.0; k];
    let mut previous = f64::NEG_INFINITY;
    let residual_tol = cfg.residual_tol(g.n());
    let mut rho = 0.0;
    for iteration in 1..=cfg.max_iter {
        for (i, &v) in members.iter().enumerate() {
            ax[i] = g.neighbors(v).map(|u| x[index[u]]).sum();
        }
        let num: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        let den: f64 = x.iter().map(|a| a * a).sum();
        rho = num / den;
        let residual = x.iter().zip(&ax).map(|(xi, ai)| (rho * xi - ai).abs()).fold(0.0, f64::max);
        if (rho - previous).abs() < cfg.tol && residual <= residual_tol {
            return (rho, x, true, iteration);
        }
        previous = rho;
        let mut top = 0.0f64;
        for (xi, ai) in x.iter_mut().zip(&ax) {
            *xi += ai;
            top = top.max(*xi);
        }
        for xi in &mut x {
            *xi /= top;
        }
    }
    (rho, x, false, cfg.max_iter)
}

/// Perron root of `A(G)`; see the module docs for the method.
pub fn spectral_radius(g: &Graph, cfg: &SpectralConfig) -> Result<SpectralResult> {
    if g.n() == 0 {
        return Err(invalid("spectral radius of the null graph"));
    }
    if cfg.tol.is_nan() || cfg.tol <= 0.0 {
        return Err(invalid("tolerance must be positive"));
    }
    let mut index = vec![0usize; g.n()];
    let mut best: Option<(f64, Vec<usize>, Vec<f64>)> = None;
    let mut converged = true;
    let mut iterations = 0;
    for comp in g.components() {
        let members: Vec<usize> = comp.iter().collect();
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let (rho, x, ok, iters) = component_root(g, &members, &index, cfg);
        converged &= ok;
        iterations = iterations.max(iters);
        if best.as_ref().is_none_or(|(b, _, _)| rho > *b) {
            best = Some((rho, members, x));
        }
    }
    let (rho, members, x) = best.expect("n >= 1 gives a component");
    let mut vector = vec![0.0; g.n()];
    for (&v, &xv) in members.iter().zip(&x) {
        vector[v] = xv;
    }
    let certified_lower = rayleigh(g, &vector)?;
    let rho = rho.max(certified_lower);
    let residual = residual_of(g, rho, &vector);
    let result = SpectralResult { rho, vector, residual, certified_lower, converged, iterations };
    if result.converged {
        debug_assert!(
            2.0 * g.edge_count() as f64 / g.n() as f64 <= result.rho + 1e-9
                && result.rho <= g.max_degree() as f64 + 1e-9,
            "Perron root {} outside [2e/n, Δ] for {g:?}",
            result.rho
        );
    }
    Ok(result)
}

fn residual_of(g: &Graph, rho: f64, x: &[f64]) -> f64 {
    (0..g.n())
        .map(|v| {
            let ax: f64 = g.neighbors(v).map(|u| x[u]).sum();
            (rho * x[v] - ax).abs()
        })
        .fold(0.0, f64::max)
}

/// `max_v |ρ x_v − Σ_{u∼v} x_u|` for the stored root and vector.
pub fn eigen_residual(g: &Graph, result: &SpectralResult) -> Result<f64> {
    if result.vector.len() != g.n() {
        return Err(invalid("vector length does not match the graph"));
    }
    Ok(residual_of(g, result.rho, &result.vector))
}

/// `2 Σ_{uv∈E} x_u x_v / Σ x_v²`, a lower bound on `ρ(G)` for any
/// non-zero vector.
pub fn rayleigh(g: &Graph, x: &[f64]) -> Result<f64> {
    if x.len() != g.n() {
        return Err(invalid("vector length does not match the graph"));
    }
    let den: f64 = x.iter().map(|a| a * a).sum();
    if den == 0.0 {
        return Err(invalid("Rayleigh quotient of the zero vector"));
    }
    let num: f64 = g.edges().map(|(u, v)| x[u] * x[v]).sum();
    Ok(2.0 * num / den)
}

fn require_converged(r: SpectralResult) -> Result<SpectralResult> {
    if r.converged {
        Ok(r)
    } else {
        Err(Error::NotConverged { iterations: r.iterations, estimate: r.rho })
    }
}

/// Orders two graphs by Perron root; roots within `cfg.tie_tol` of each
/// other are `Equal`.
pub fn compare_rho(g: &Graph, h: &Graph, cfg: &SpectralConfig) -> Result<Ordering> {
    if cfg.tie_tol.is_nan() || cfg.tie_tol <= 0.0 {
        return Err(invalid("tie tolerance must be positive"));
    }
    let a = require_converged(spectral_radius(g, cfg)?)?;
    let b = require_converged(spectral_radius(h, cfg)?)?;
    let diff = a.rho - b.rho;
    Ok(if diff.abs() < cfg.tie_tol {
        Ordering::Equal
    } else if diff > 0.0 {
        Ordering::Greater
    } else {
        Ordering::Less
    })
}

/// Perron data of `K_{q-1} ∨ K_p(n_1, …, n_p)` from its equitable quotient.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientSpectrum {
    pub rho: f64,
    /// Common eigenvector entry of each part (in input order; 0 for empty
    /// parts), max-normalized over all classes.
    pub part_entries: Vec<f64>,
    /// Entry on the joined clique, when `q - 1 > 0`.
    pub clique_entry: Option<f64>,
    pub converged: bool,
}

/// Power iteration on the quotient matrix of the partition into the parts
/// and the joined clique. A vertex of part `i` sees `n_j` vertices of each
/// other part and all `q - 1` clique vertices; a clique vertex sees every
/// part vertex and the other `q - 2` clique vertices.
pub fn quotient_spectrum(clique: usize, parts: &[usize], cfg: &SpectralConfig) -> Result<QuotientSpectrum> {
    if parts.is_empty() {
        return Err(invalid("quotient needs at least one part"));
    }
    // class list: (size, is_clique, source part index)
    let mut classes: Vec<(usize, bool, usize)> =
        parts.iter().enumerate().filter(|&(_, &s)| s > 0).map(|(i, &s)| (s, false, i)).collect();
    if clique > 0 {
        classes.push((clique, true, usize::MAX));
    }
    let c = classes.len();
    let mut b = vec![0.0f64; c * c];
    for (i, &(_, ci, _)) in classes.iter().enumerate() {
        for (j, &(sj, cj, _)) in classes.iter().enumerate() {
            b[i * c + j] = match (i == j, ci && cj) {
                (true, true) => (sj - 1) as f64,
                (true, false) => 0.0,
                _ => sj as f64,
            };
        }
    }
    let weights: Vec<f64> = classes.iter().map(|&(s, _, _)| s as f64).collect();
    let n: usize = classes.iter().map(|&(s, _, _)| s).sum();

    let mut y = vec![1.0; c];
    let mut by = vec![0.0; c];
    let mut previous = f64::NEG_INFINITY;
    let mut rho = 0.0;
    let mut converged = n <= 1;
    if !converged {
        for _ in 0..cfg.max_iter {
            for i in 0..c {
                by[i] = (0..c).map(|j| b[i * c + j] * y[j]).sum();
            }
            // Rayleigh quotient of the class-constant vector on the full graph
            let num: f64 = (0..c).map(|i| weights[i] * y[i] * by[i]).sum();
            let den: f64 = (0..c).map(|i| weights[i] * y[i] * y[i]).sum();
            rho = num / den;
            let residual = (0..c).map(|i| (rho * y[i] - by[i]).abs()).fold(0.0, f64::max);
            if (rho - previous).abs() < cfg.tol && residual <= cfg.residual_tol(n) {
                converged = true;
                break;
            }
            previous = rho;
            let mut top = 0.0f64;
            for i in 0..c {
                y[i] += by[i];
                top = top.max(y[i]);
            }
            for yi in &mut y {
                *yi /= top;
            }
        }
    }
    let mut part_entries = vec![0.0; parts.len()];
    let mut clique_entry = None;
    for (i, &(_, is_clique, src)) in classes.iter().enumerate() {
        if is_clique {
            clique_entry = Some(y[i]);
        } else {
            part_entries[src] = y[i];
        }
    }
    Ok(QuotientSpectrum { rho, part_entries, clique_entry, converged })
}

/// `ρ(K_{q-1} ∨ K_p(n_1, …, n_p))`; `clique` is `q - 1`.
pub fn quotient_rho(clique: usize, parts: &[usize], cfg: &SpectralConfig) -> Result<f64> {
    let s = quotient_spectrum(clique, parts, cfg)?;
    if !s.converged {
        return Err(Error::NotConverged { iterations: cfg.max_iter, estimate: s.rho });
    }
    Ok(s.rho)
}
