//! Cross-module invariant suite behind the `verify` CLI verb: exhaustive
//! desk-scale checks of the codimension formula, the closure order, the
//! fibration bookkeeping, the double-cover combinatorics, and the graded
//! Chow group itself.

use crate::chow::chow_group;
use crate::cover::{
    fibration_image, fibration_pullback, orbit_splits, stabilizer_component_order,
    survivor_involution,
};
use crate::orbit::{
    closure_contains, orbit_codimension, orbit_codimension_oracle, representative_form,
    stratum_index,
};
use crate::perm::{bruhat_leq, coxeter_length, enumerate_involutions};

/// Outcome of one named invariant check.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &str, detail: String) -> Self {
        Check {
            name: name.into(),
            pass: true,
            detail,
        }
    }

    fn fail(name: &str, detail: String) -> Self {
        Check {
            name: name.into(),
            pass: false,
            detail,
        }
    }
}

// walks the pairing tree without storing involutions
fn count_involutions(m: usize, fpf_only: bool) -> u64 {
    fn go(free: &mut Vec<bool>, fpf_only: bool) -> u64 {
        let Some(i) = free.iter().position(|&f| f) else {
            return 1;
        };
        let mut total = 0;
        if !fpf_only {
            free[i] = false;
            total += go(free, fpf_only);
            free[i] = true;
        }
        for j in i + 1..free.len() {
            if free[j] {
                free[i] = false;
                free[j] = false;
                total += go(free, fpf_only);
                free[i] = true;
                free[j] = true;
            }
        }
        total
    }
    go(&mut vec![true; m], fpf_only)
}

fn check_counts(max_m: usize) -> Check {
    let name = "involution counts match the recurrences";
    let mut i_prev: u64 = 1; // I(0)
    let mut i_cur: u64 = 1; // I(1)
    let mut dfact: u64 = 1;
    for m in (2..=max_m).step_by(2) {
        let i_m1 = i_cur + (m as u64 - 2) * i_prev;
        let i_m = i_m1 + (m as u64 - 1) * i_cur;
        dfact *= m as u64 - 1;
        let got_all = count_involutions(m, false);
        let got_fpf = count_involutions(m, true);
        if got_all != i_m || got_fpf != dfact {
            return Check::fail(
                name,
                format!("m={m}: got ({got_all}, {got_fpf}), expected ({i_m}, {dfact})"),
            );
        }
        i_prev = i_m1;
        i_cur = i_m;
    }
    Check::pass(name, format!("verified for even m <= {max_m}"))
}

fn check_formula_vs_oracle() -> Check {
    let name = "codimension formula agrees with the stabilizer-dimension oracle";
    let mut cases = 0;
    for m in (2..=8usize).step_by(2) {
        for w in enumerate_involutions(m, false).unwrap() {
            cases += 1;
            let (f, o) = (orbit_codimension(&w), orbit_codimension_oracle(&w));
            if f != o {
                return Check::fail(name, format!("O_{}: formula {f}, oracle {o}", w));
            }
        }
    }
    Check::pass(name, format!("{cases} involutions, 2n <= 8"))
}

fn check_fibrations() -> Check {
    let name = "fibration suite: round trip, fpf preservation, codim bookkeeping";
    for n in 2..=4usize {
        for w_prime in enumerate_involutions(2 * n - 2, false).unwrap() {
            for i in 1..2 * n {
                let up = match fibration_pullback(n, i, &w_prime) {
                    Ok(u) => u,
                    Err(e) => return Check::fail(name, e.to_string()),
                };
                if fibration_image(&up).unwrap() != w_prime {
                    return Check::fail(name, format!("round trip failed at n={n}, i={i}"));
                }
                if orbit_codimension(&up) != orbit_codimension(&w_prime) + (2 * n - i) {
                    return Check::fail(name, format!("codim bookkeeping at n={n}, i={i}"));
                }
                if w_prime.is_fpf() && !up.is_fpf() {
                    return Check::fail(name, format!("fpf lost at n={n}, i={i}"));
                }
            }
        }
        for w in enumerate_involutions(2 * n, true).unwrap() {
            if stratum_index(&w) < 2 * n && !fibration_image(&w).unwrap().is_fpf() {
                return Check::fail(name, format!("image of fpf O_{w} not fpf"));
            }
        }
    }
    Check::pass(name, "exhaustive for 2n <= 8".into())
}

fn check_closure_order() -> Check {
    let name = "closure order: partial order, stratum monotonicity, codim growth";
    for m in (2..=8usize).step_by(2) {
        let all = enumerate_involutions(m, false).unwrap();
        let k = all.len();
        let mut leq = vec![false; k * k];
        for a in 0..k {
            for b in 0..k {
                // closure_contains(outer=a, inner=b) == bruhat a <= b
                let c = closure_contains(&all[a], &all[b]).unwrap();
                if c != bruhat_leq(&all[a], &all[b]).unwrap() {
                    return Check::fail(name, "rank criterion != Bruhat criterion".into());
                }
                leq[a * k + b] = c;
                if c && a != b {
                    if stratum_index(&all[b]) > stratum_index(&all[a]) {
                        return Check::fail(
                            name,
                            format!("stratum not monotone: {} in closure of {}", all[b], all[a]),
                        );
                    }
                    if orbit_codimension(&all[b]) <= orbit_codimension(&all[a])
                        || coxeter_length(&all[a]) >= coxeter_length(&all[b])
                    {
                        return Check::fail(name, format!("codim/length not increasing at m={m}"));
                    }
                }
                if c && leq[b * k + a] && a != b {
                    return Check::fail(name, "antisymmetry violated".into());
                }
            }
        }
        // transitivity via bitset rows
        let words = k.div_ceil(64);
        let rows: Vec<Vec<u64>> = (0..k)
            .map(|a| {
                let mut row = vec![0u64; words];
                for b in 0..k {
                    if leq[a * k + b] {
                        row[b / 64] |= 1 << (b % 64);
                    }
                }
                row
            })
            .collect();
        for a in 0..k {
            for b in 0..k {
                if leq[a * k + b] && rows[a].iter().zip(&rows[b]).any(|(x, y)| y & !x != 0) {
                    return Check::fail(name, format!("transitivity violated at m={m}"));
                }
            }
        }
    }
    Check::pass(name, "exhaustive over all involution pairs, 2n <= 8".into())
}

fn check_double_cover() -> Check {
    let name = "double cover: splitting, component groups, g_j characterization";
    for m in (2..=8usize).step_by(2) {
        for w in enumerate_involutions(m, false).unwrap() {
            if orbit_splits(&w) != w.is_fpf() {
                return Check::fail(name, format!("split criterion at O_{w}"));
            }
            if stabilizer_component_order(&w) != 1u64 << w.fixed_points() {
                return Check::fail(name, format!("component order at O_{w}"));
            }
            if orbit_splits(&w) != (stabilizer_component_order(&w) == 1) {
                return Check::fail(name, format!("split/component mismatch at O_{w}"));
            }
            let q = representative_form(&w).matrix;
            for j in 1..=m {
                if (q[j - 1][m - 1] != 0) != (stratum_index(&w) == j) {
                    return Check::fail(name, format!("g_{j} characterization at O_{w}"));
                }
            }
        }
    }
    Check::pass(name, "exhaustive for 2n <= 8".into())
}

fn check_survivors() -> Check {
    let name = "survivor is the unique minimal-codimension fpf orbit";
    for n in 1..=5usize {
        let s = survivor_involution(n);
        if orbit_codimension(&s) != n {
            return Check::fail(name, format!("survivor codim != {n}"));
        }
        for w in enumerate_involutions(2 * n, true).unwrap() {
            if w != s && orbit_codimension(&w) <= n {
                return Check::fail(name, format!("tie at n={n}: O_{w}"));
            }
        }
    }
    Check::pass(name, "exhaustive for n <= 5".into())
}

fn check_theorem(up_to: usize) -> Check {
    let name = "graded Chow group is Z at degree 0 and Z at degree n";
    for n in 1..=up_to {
        match chow_group(n) {
            Ok(g) => {
                let ok = g.rank_at(0) == 1
                    && g.rank_at(n) == 1
                    && g.groups.len() == (if n == 0 { 1 } else { 2 })
                    && g.groups.values().all(|c| c.torsion.is_empty());
                if !ok {
                    return Check::fail(name, format!("n={n}: {g:?}"));
                }
            }
            Err(e) => return Check::fail(name, format!("n={n}: {e}")),
        }
    }
    Check::pass(name, format!("verified for n = 1..={up_to}"))
}

/// Runs the full invariant suite. The exhaustive combinatorial checks run
/// at their built-in scales (2n <= 8); the graded group is computed for
/// every n up to `up_to`.
pub fn run_verification(up_to: usize) -> Vec<Check> {
    vec![
        check_counts(16),
        check_formula_vs_oracle(),
        check_fibrations(),
        check_closure_order(),
        check_double_cover(),
        check_survivors(),
        check_theorem(up_to.max(1)),
    ]
}
