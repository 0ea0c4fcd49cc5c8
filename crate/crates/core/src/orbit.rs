//! B-orbits on GL(2n)/O(2n): codimension, closure order, strata, and the
//! orbit graph with codimension-1 closure edges.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::perm::{coxeter_length, Involution};
use crate::{Error, Result};

/// A B-orbit, indexed by its involution, with derived attributes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub w: Involution,
    pub codim: usize,
    pub fpf: bool,
    pub stratum: usize,
}

impl Orbit {
    pub fn new(w: Involution) -> Self {
        let codim = orbit_codimension(&w);
        let fpf = w.is_fpf();
        let stratum = stratum_index(&w);
        Orbit {
            w,
            codim,
            fpf,
            stratum,
        }
    }
}

/// Codimension of the orbit of `w`: `(length + transpositions) / 2`.
/// The numerator is always even because every transposition (a b) of `w`
/// contributes an odd inversion count.
pub fn orbit_codimension(w: &Involution) -> usize {
    let num = coxeter_length(w) + w.transpositions();
    assert!(num % 2 == 0, "codimension numerator must be even");
    num / 2
}

/// Independent oracle for the codimension: the dimension of the space of
/// upper-triangular matrices `X` with `X Q + Q X^T = 0`, where `Q` is the
/// representative form of `w`. This is the Lie algebra of the Borel
/// stabilizer of the representative, whose dimension equals the orbit
/// codimension. Solved by exact Gaussian elimination over the rationals.
pub fn orbit_codimension_oracle(w: &Involution) -> usize {
    let m = w.size();
    // unknowns: x[a][b] for 1 <= a <= b <= m
    let nvars = m * (m + 1) / 2;
    let var = |a: usize, b: usize| -> Option<usize> {
        if a <= b {
            Some((a - 1) * (2 * m + 2 - a) / 2 + (b - a))
        } else {
            None
        }
    };
    // (X Q + Q X^T)[i][j] = x[i][w(j)] + x[j][w(i)]; the matrix is
    // symmetric, so i <= j suffices
    let mut entries = Vec::new();
    let mut rows = 0;
    for i in 1..=m {
        for j in i..=m {
            let mut row = vec![0i64; nvars];
            if let Some(k) = var(i, w.apply(j)) {
                row[k] += 1;
            }
            if let Some(k) = var(j, w.apply(i)) {
                row[k] += 1;
            }
            entries.extend_from_slice(&row);
            rows += 1;
        }
    }
    crate::linalg::rational_nullity(rows, nvars, &entries)
}

/// The symmetric permutation matrix `Q[i][j] = [w(i) = j]` representing
/// the orbit of `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentativeForm {
    pub matrix: Vec<Vec<i64>>,
}

pub fn representative_form(w: &Involution) -> RepresentativeForm {
    let m = w.size();
    let mut matrix = vec![vec![0i64; m]; m];
    for i in 1..=m {
        matrix[i - 1][w.apply(i) - 1] = 1;
    }
    RepresentativeForm { matrix }
}

// corner table s[i][j] = #{k >= i : w(k) >= j}, 1 <= i, j <= m+1
fn corner_table(w: &Involution) -> Vec<u32> {
    let m = w.size();
    let width = m + 2;
    let mut s = vec![0u32; width * width];
    for i in (1..=m).rev() {
        let wi = w.apply(i);
        for j in 1..=m {
            s[i * width + j] = s[(i + 1) * width + j] + u32::from(wi >= j);
        }
    }
    s
}

/// `true` iff the orbit of `inner` lies in the closure of the orbit of
/// `outer`: all lower-right corner ranks of `inner` are bounded by those
/// of `outer`. Equivalent to `outer <= inner` in Bruhat order.
pub fn closure_contains(outer: &Involution, inner: &Involution) -> Result<bool> {
    if outer.size() != inner.size() {
        return Err(Error::SizeMismatch {
            left: outer.size(),
            right: inner.size(),
        });
    }
    let (so, si) = (corner_table(outer), corner_table(inner));
    Ok(si.iter().zip(so.iter()).all(|(a, b)| a <= b))
}

/// Stratum index of the orbit of `w`: the unique `i` with
/// `q_w(e_i, e_2n) != 0`, namely `w(2n)`.
pub fn stratum_index(w: &Involution) -> usize {
    w.apply(w.size())
}

/// Directed codimension-1 closure edge, deeper orbit to shallower orbit,
/// as indices into the graph's vertex list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub cross_stratum: bool,
}

/// Graph of B-orbits with codimension-1 closure-inclusion edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitGraph {
    pub n: usize,
    pub fpf_only: bool,
    pub vertices: Vec<Orbit>,
    pub edges: Vec<Edge>,
}

#[derive(Clone, Copy, Debug)]
pub struct GraphOptions {
    /// Lift the size caps.
    pub allow_large: bool,
    /// Compare vertex pairs in parallel; the edge set is identical either
    /// way because edges are sorted after the merge.
    pub parallel: bool,
    /// Largest 2n accepted without `allow_large`, fpf graphs.
    pub cap_fpf: usize,
    /// Largest 2n accepted without `allow_large`, all-orbit graphs.
    pub cap_all: usize,
}

impl Default for GraphOptions {
    fn default() -> Self {
        GraphOptions {
            allow_large: false,
            parallel: false,
            cap_fpf: 12,
            cap_all: 10,
        }
    }
}

/// All orbits of GL(2n)/O(2n), sorted by (codim, one-line notation).
pub fn enumerate_orbits(n: usize, fpf_only: bool) -> Result<Vec<Orbit>> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let mut orbits: Vec<Orbit> = crate::perm::enumerate_involutions(2 * n, fpf_only)?
        .into_iter()
        .map(Orbit::new)
        .collect();
    orbits.sort_by(|a, b| (a.codim, a.w.one_line()).cmp(&(b.codim, b.w.one_line())));
    Ok(orbits)
}

/// Builds the orbit graph for GL(2n)/O(2n). Vertices are sorted by
/// (codim, one-line notation); edges are all closure-containment pairs
/// with codimension difference exactly 1, oriented deeper -> shallower.
pub fn build_orbit_graph(n: usize, fpf_only: bool, opts: GraphOptions) -> Result<OrbitGraph> {
    let m = 2 * n;
    let cap = if fpf_only { opts.cap_fpf } else { opts.cap_all };
    if n > 0 && m > cap && !opts.allow_large {
        return Err(Error::SizeCapExceeded { size: m, cap });
    }
    let vertices = enumerate_orbits(n, fpf_only)?;

    let tables: Vec<Vec<u32>> = vertices.iter().map(|o| corner_table(&o.w)).collect();
    let max_codim = vertices.iter().map(|o| o.codim).max().unwrap_or(0);
    let mut by_codim: Vec<Vec<usize>> = vec![Vec::new(); max_codim + 1];
    for (idx, o) in vertices.iter().enumerate() {
        by_codim[o.codim].push(idx);
    }

    // only deeper (codim d+1) against shallower (codim d) pairs can be edges
    let check = |source: usize, target: usize| -> Option<Edge> {
        // source is inner (deeper), target is outer
        let contained = tables[source]
            .iter()
            .zip(tables[target].iter())
            .all(|(a, b)| a <= b);
        contained.then(|| Edge {
            source,
            target,
            cross_stratum: vertices[source].stratum != vertices[target].stratum,
        })
    };

    // one job per deeper vertex, paired with the shallower bucket index
    let jobs: Vec<(usize, usize)> = (0..max_codim)
        .flat_map(|d| by_codim[d + 1].iter().map(move |&s| (s, d)))
        .collect();
    let per_source = |&(s, d): &(usize, usize)| -> Vec<Edge> {
        by_codim[d].iter().filter_map(|&t| check(s, t)).collect()
    };
    let mut edges: Vec<Edge> = if opts.parallel {
        jobs.par_iter().flat_map_iter(per_source).collect()
    } else {
        jobs.iter().flat_map(per_source).collect()
    };
    edges.sort_by_key(|e| (e.source, e.target));

    Ok(OrbitGraph {
        n,
        fpf_only,
        vertices,
        edges,
    })
}

/// Per-stratum summary of an orbit graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumSummary {
    pub stratum: usize,
    pub orbits: usize,
    pub fpf_orbits: usize,
    pub min_codim: Option<usize>,
}

pub fn strata_summary(n: usize, orbits: &[Orbit]) -> Vec<StratumSummary> {
    (1..=2 * n)
        .map(|stratum| {
            let in_stratum: Vec<&Orbit> =
                orbits.iter().filter(|o| o.stratum == stratum).collect();
            StratumSummary {
                stratum,
                orbits: in_stratum.len(),
                fpf_orbits: in_stratum.iter().filter(|o| o.fpf).count(),
                min_codim: in_stratum.iter().map(|o| o.codim).min(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{bruhat_leq, enumerate_involutions};

    fn inv(images: &[u32]) -> Involution {
        Involution::new(images.to_vec()).unwrap()
    }

    #[test]
    fn codimension_examples() {
        assert_eq!(orbit_codimension(&inv(&[2, 1, 4, 3])), 2);
        assert_eq!(orbit_codimension(&Involution::identity(4)), 0);
        assert_eq!(orbit_codimension(&inv(&[6, 5, 4, 3, 2, 1])), 9);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(orbit_codimension_oracle(&Involution::identity(2)), 0);
        assert_eq!(orbit_codimension_oracle(&inv(&[2, 1])), 1);
        assert_eq!(orbit_codimension_oracle(&inv(&[2, 1, 4, 3])), 2);
    }

    #[test]
    fn formula_matches_oracle_small() {
        // exhaustive 2n <= 6 here; 2n = 8 runs in the acceptance suite
        for m in [2usize, 4, 6] {
            for w in enumerate_involutions(m, false).unwrap() {
                assert_eq!(
                    orbit_codimension(&w),
                    orbit_codimension_oracle(&w),
                    "codim mismatch at {w}"
                );
            }
        }
    }

    #[test]
    fn closure_examples() {
        let a = inv(&[2, 1, 4, 3]); // (12)(34)
        let b = inv(&[3, 4, 1, 2]); // (13)(24)
        assert!(closure_contains(&a, &b).unwrap());
        assert!(closure_contains(&a, &a).unwrap());
        assert!(!closure_contains(&b, &a).unwrap());
        assert!(closure_contains(&a, &Involution::identity(6)).is_err());
    }

    #[test]
    fn closure_is_reversed_bruhat() {
        for m in [2usize, 4, 6] {
            let all = enumerate_involutions(m, false).unwrap();
            for u in &all {
                for v in &all {
                    assert_eq!(
                        closure_contains(u, v).unwrap(),
                        bruhat_leq(u, v).unwrap(),
                        "criterion mismatch at {u}, {v}"
                    );
                }
            }
        }
    }

    #[test]
    fn stratum_examples() {
        assert_eq!(stratum_index(&inv(&[2, 1, 4, 3, 6, 5])), 5);
        assert_eq!(stratum_index(&inv(&[6, 5, 4, 3, 2, 1])), 1);
        let w = inv(&[2, 1, 3, 4]);
        assert_eq!(stratum_index(&w), 4);
        assert!(!w.is_fpf());
    }

    #[test]
    fn representative_form_examples() {
        assert_eq!(
            representative_form(&Involution::identity(2)).matrix,
            vec![vec![1, 0], vec![0, 1]]
        );
        assert_eq!(
            representative_form(&inv(&[2, 1])).matrix,
            vec![vec![0, 1], vec![1, 0]]
        );
        let q = representative_form(&inv(&[3, 4, 1, 2])).matrix;
        for i in 0..4 {
            for j in 0..4 {
                let expect = matches!((i, j), (0, 2) | (2, 0) | (1, 3) | (3, 1));
                assert_eq!(q[i][j] == 1, expect);
                assert_eq!(q[i][j], q[j][i]);
            }
        }
    }

    #[test]
    fn gl4_fpf_graph_is_a_chain() {
        let g = build_orbit_graph(2, true, GraphOptions::default()).unwrap();
        assert_eq!(g.vertices.len(), 3);
        let codims: Vec<usize> = g.vertices.iter().map(|o| o.codim).collect();
        assert_eq!(codims, vec![2, 3, 4]);
        assert_eq!(g.vertices[0].w, inv(&[2, 1, 4, 3]));
        assert_eq!(g.vertices[1].w, inv(&[3, 4, 1, 2]));
        assert_eq!(g.vertices[2].w, inv(&[4, 3, 2, 1]));
        assert_eq!(g.edges.len(), 2);
        assert_eq!((g.edges[0].source, g.edges[0].target), (1, 0));
        assert_eq!((g.edges[1].source, g.edges[1].target), (2, 1));
    }

    #[test]
    fn single_vertex_graph_for_n1() {
        let g = build_orbit_graph(1, true, GraphOptions::default()).unwrap();
        assert_eq!(g.vertices.len(), 1);
        assert_eq!(g.vertices[0].w, inv(&[2, 1]));
        assert!(g.edges.is_empty());
    }

    #[test]
    fn graph_edge_invariants() {
        let g = build_orbit_graph(3, false, GraphOptions::default()).unwrap();
        for e in &g.edges {
            let (s, t) = (&g.vertices[e.source], &g.vertices[e.target]);
            assert_eq!(s.codim, t.codim + 1);
            assert!(closure_contains(&t.w, &s.w).unwrap());
            assert_eq!(e.cross_stratum, s.stratum != t.stratum);
        }
        // unique dense orbit
        let dense: Vec<&Orbit> = g.vertices.iter().filter(|o| o.codim == 0).collect();
        assert_eq!(dense.len(), 1);
        assert_eq!(dense[0].w, Involution::identity(6));
    }

    #[test]
    fn size_cap_is_enforced() {
        assert!(matches!(
            build_orbit_graph(7, true, GraphOptions::default()),
            Err(Error::SizeCapExceeded { .. })
        ));
        assert!(matches!(
            build_orbit_graph(6, false, GraphOptions::default()),
            Err(Error::SizeCapExceeded { .. })
        ));
        // the override lifts the cap; shrunken caps keep the case small
        let tiny = GraphOptions {
            cap_fpf: 4,
            cap_all: 4,
            ..Default::default()
        };
        assert!(build_orbit_graph(3, true, tiny).is_err());
        let lifted = GraphOptions {
            allow_large: true,
            ..tiny
        };
        let g = build_orbit_graph(3, true, lifted).unwrap();
        assert_eq!(g, build_orbit_graph(3, true, GraphOptions::default()).unwrap());
    }

    #[test]
    fn parallel_build_matches_sequential() {
        let seq = build_orbit_graph(3, false, GraphOptions::default()).unwrap();
        let par = build_orbit_graph(
            3,
            false,
            GraphOptions {
                parallel: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn strata_summary_gl6_fpf() {
        let orbits = enumerate_orbits(3, true).unwrap();
        let summary = strata_summary(3, &orbits);
        assert_eq!(summary.len(), 6);
        // fpf orbits never sit in the last stratum
        assert_eq!(summary[5].orbits, 0);
        assert_eq!(summary[5].min_codim, None);
        let total: usize = summary.iter().map(|s| s.orbits).sum();
        assert_eq!(total, 15);
    }
}
