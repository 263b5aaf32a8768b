//! Floating-point adjacency spectra and graph energy.
//!
//! The eigensolver is a cyclic Jacobi iteration on dense symmetric storage:
//! unconditionally robust for real symmetric matrices, and at order <= 64 the
//! cubic sweep cost is irrelevant.

use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Off-diagonal Frobenius norm at which the Jacobi sweep stops.
const OFF_DIAG_TOL: f64 = 1e-13;
const MAX_SWEEPS: usize = 64;

/// Numerical tolerances used by the floating-point layer and reported in
/// every scan output.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Allowed |sum of eigenvalues|.
    pub trace: f64,
    /// Allowed |sum of squared eigenvalues - 2m|.
    pub frobenius: f64,
    /// Allowed slack in energy identities.
    pub energy: f64,
    /// Band around an integer inside which the fast filter refuses to decide
    /// and defers to exact arithmetic.
    pub fast_filter: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            trace: 1e-10,
            frobenius: 1e-9,
            energy: 1e-10,
            fast_filter: 1e-7,
        }
    }
}

/// Sorted adjacency spectrum of a graph.
#[derive(Debug, Clone)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    energy: f64,
    n: usize,
    m: usize,
}

impl Spectrum {
    /// Eigenvalues sorted descending.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Sum of absolute eigenvalues.
    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }
}

/// Full adjacency spectrum via cyclic Jacobi.
pub fn eigenvalues(g: &Graph) -> Spectrum {
    let n = g.n();
    let mut a = vec![0.0f64; n * n];
    for (u, v) in g.edges() {
        a[u * n + v] = 1.0;
        a[v * n + u] = 1.0;
    }
    jacobi(&mut a, n);
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(|x, y| y.partial_cmp(x).unwrap());
    let energy = eig.iter().map(|x| x.abs()).sum();
    Spectrum {
        eigenvalues: eig,
        energy,
        n,
        m: g.m(),
    }
}

/// Graph energy: sum of absolute adjacency eigenvalues.
pub fn energy(g: &Graph) -> f64 {
    eigenvalues(g).energy()
}

fn off_diag_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            s += a[p * n + q] * a[p * n + q];
        }
    }
    (2.0 * s).sqrt()
}

fn jacobi(a: &mut [f64], n: usize) {
    if n < 2 {
        return;
    }
    for _ in 0..MAX_SWEEPS {
        if off_diag_norm(a, n) < OFF_DIAG_TOL {
            return;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let tau = (aqq - app) / (2.0 * apq);
                // smaller-angle root, computed without cancellation
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    1.0 / (tau - (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[p * n + k] = a[k * n + p];
                    a[k * n + q] = s * akp + c * akq;
                    a[q * n + k] = a[k * n + q];
                }
            }
        }
    }
}

/// True iff the graph contains no 4-cycle: no vertex pair has two or more
/// common neighbors.
pub fn is_quadrangle_free(g: &Graph) -> bool {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            if (g.row(u) & g.row(v)).count_ones() >= 2 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::NamedGraph;

    fn spectrum_of(name: NamedGraph) -> Spectrum {
        eigenvalues(&name.build().unwrap())
    }

    fn assert_close(actual: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(actual.len(), expected.len());
        for (a, e) in actual.iter().zip(expected) {
            assert!((a - e).abs() < tol, "{actual:?} vs {expected:?}");
        }
    }

    #[test]
    fn small_spectra() {
        assert_close(spectrum_of(NamedGraph::S2).eigenvalues(), &[1.0, -1.0], 1e-12);
        assert_close(
            spectrum_of(NamedGraph::K22).eigenvalues(),
            &[2.0, 0.0, 0.0, -2.0],
            1e-12,
        );
        // C4 is the same graph
        assert_close(
            spectrum_of(NamedGraph::Cycle(4)).eigenvalues(),
            &[2.0, 0.0, 0.0, -2.0],
            1e-12,
        );
    }

    #[test]
    fn known_energies() {
        assert!((spectrum_of(NamedGraph::K33).energy() - 6.0).abs() < 1e-12);
        assert_eq!(spectrum_of(NamedGraph::S1).energy(), 0.0);
        let e = spectrum_of(NamedGraph::K23).energy();
        assert!((e - 2.0 * 6.0f64.sqrt()).abs() < 1e-10);
        assert!(e < 5.0);
    }

    #[test]
    fn path_energy_closed_form() {
        // roots of x^4 - 3x^2 + 1 sum in absolute value to 2*sqrt(5)
        let e = spectrum_of(NamedGraph::Path(4)).energy();
        assert!((e - 2.0 * 5.0f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn complete_bipartite_closed_form() {
        for a in 1..=6usize {
            for b in 1..=6usize {
                let g = NamedGraph::CompleteBipartite(a, b).build().unwrap();
                let e = energy(&g);
                let expected = 2.0 * ((a * b) as f64).sqrt();
                assert!((e - expected).abs() < 1e-10, "K{a},{b}: {e} vs {expected}");
            }
        }
    }

    #[test]
    fn trace_and_frobenius() {
        let tol = Tolerances::default();
        for name in [
            NamedGraph::K33,
            NamedGraph::W,
            NamedGraph::Cycle(9),
            NamedGraph::Path(17),
            NamedGraph::Star(12),
        ] {
            let s = spectrum_of(name);
            let trace: f64 = s.eigenvalues().iter().sum();
            let frob: f64 = s.eigenvalues().iter().map(|x| x * x).sum();
            assert!(trace.abs() < tol.trace);
            assert!((frob - 2.0 * s.m() as f64).abs() < tol.frobenius);
        }
    }

    #[test]
    fn bipartite_symmetry() {
        for name in [
            NamedGraph::W,
            NamedGraph::Q,
            NamedGraph::K23,
            NamedGraph::Path(11),
        ] {
            let s = spectrum_of(name);
            let eig = s.eigenvalues();
            let n = eig.len();
            for i in 0..n {
                assert!((eig[i] + eig[n - 1 - i]).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn disjoint_union_additivity() {
        // P4 and C5 in one graph
        let g = crate::graph::Graph::build(
            9,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 4),
            ],
        )
        .unwrap();
        let p4 = NamedGraph::Path(4).build().unwrap();
        let c5 = NamedGraph::Cycle(5).build().unwrap();
        assert!((energy(&g) - energy(&p4) - energy(&c5)).abs() < 1e-10);
    }

    #[test]
    fn quadrangle_free_cases() {
        assert!(!is_quadrangle_free(&NamedGraph::K23.build().unwrap()));
        assert!(is_quadrangle_free(&NamedGraph::Path(9).build().unwrap()));
        assert!(is_quadrangle_free(&NamedGraph::W.build().unwrap()));
        assert!(is_quadrangle_free(&NamedGraph::Cycle(5).build().unwrap()));
        assert!(!is_quadrangle_free(&NamedGraph::Cycle(4).build().unwrap()));
    }

    #[test]
    fn w_energy_below_order() {
        let e = spectrum_of(NamedGraph::W).energy();
        assert!((e - (4.0 + 2.0 * 2.0f64.sqrt())).abs() < 1e-10);
        assert!(e < 7.0);
    }
}
