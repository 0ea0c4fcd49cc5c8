//! Involutions in the symmetric group and the rank-table Bruhat primitive.
//!
//! One-line notation with 1-based values is the canonical form everywhere;
//! cycle notation is accepted only when parsing user input.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A self-inverse permutation of `{1..m}`, stored in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Involution {
    images: Vec<u32>,
}

impl Involution {
    /// Validates that `images` is a self-inverse bijection on `{1..m}`.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &v in &images {
            let v = v as usize;
            if v < 1 || v > m || seen[v] {
                return Err(Error::NotAPermutation {
                    m,
                    detail: format!("value {v} out of range or repeated"),
                });
            }
            seen[v] = true;
        }
        let w = Involution { images };
        for k in 1..=m {
            let image = w.apply(w.apply(k));
            if image != k {
                return Err(Error::NotAnInvolution { k, image });
            }
        }
        Ok(w)
    }

    pub fn identity(m: usize) -> Self {
        Involution {
            images: (1..=m as u32).collect(),
        }
    }

    /// Ambient size m.
    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// w(k), 1-based.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] as usize
    }

    pub fn one_line(&self) -> &[u32] {
        &self.images
    }

    pub fn fixed_points(&self) -> usize {
        (1..=self.size()).filter(|&k| self.apply(k) == k).count()
    }

    pub fn transpositions(&self) -> usize {
        (self.size() - self.fixed_points()) / 2
    }

    pub fn is_fpf(&self) -> bool {
        self.fixed_points() == 0
    }

    /// Product-of-transpositions display, fixed points omitted: `(12)(34)`,
    /// identity `()`. Entries above 9 are space-separated: `(1 12)`.
    pub fn cycles_string(&self) -> String {
        let mut out = String::new();
        for k in 1..=self.size() {
            let v = self.apply(k);
            if v > k {
                if v > 9 || k > 9 {
                    out.push_str(&format!("({k} {v})"));
                } else {
                    out.push_str(&format!("({k}{v})"));
                }
            }
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    /// Parses cycle notation like `(1 6)(2 5)(3 4)`, `(16)(25)(34)` or
    /// `(12)(34)` into an involution of the given ambient size.
    /// Whitespace-insensitive; 1-based; fixed points may be omitted.
    /// A parenthesized group without separators is read digit by digit,
    /// so sizes above 9 require spaces or commas inside each cycle.
    pub fn from_cycles(s: &str, m: usize) -> Result<Self> {
        let mut images: Vec<u32> = (1..=m as u32).collect();
        let s = s.trim();
        if s.is_empty() || s == "()" || s == "e" || s == "id" {
            return Involution::new(images);
        }
        let mut rest = s;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            let Some(open) = rest.strip_prefix('(') else {
                return Err(Error::Parse(format!("expected '(' at {rest:?}")));
            };
            let Some(close) = open.find(')') else {
                return Err(Error::Parse("unbalanced parenthesis".into()));
            };
            let body = &open[..close];
            rest = &open[close + 1..];
            let entries: Vec<usize> = if body.contains(|c: char| !c.is_ascii_digit()) {
                body.split(|c: char| !c.is_ascii_digit())
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(e.to_string())))
                    .collect::<Result<_>>()?
            } else {
                body.chars()
                    .map(|c| c.to_digit(10).unwrap() as usize)
                    .collect()
            };
            match entries.len() {
                0 => continue,
                1 => continue, // explicit fixed point
                2 => {
                    let (a, b) = (entries[0], entries[1]);
                    if a < 1 || a > m || b < 1 || b > m || a == b {
                        return Err(Error::Parse(format!("bad cycle ({a} {b}) for m={m}")));
                    }
                    if images[a - 1] != a as u32 || images[b - 1] != b as u32 {
                        return Err(Error::Parse(format!("letter reused in cycle ({a} {b})")));
                    }
                    images[a - 1] = b as u32;
                    images[b - 1] = a as u32;
                }
                _ => {
                    return Err(Error::Parse(
                        "cycles longer than 2 do not define an involution".into(),
                    ))
                }
            }
        }
        Involution::new(images)
    }
}

impl std::fmt::Debug for Involution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Involution[{}]", self.cycles_string())
    }
}

impl std::fmt::Display for Involution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.cycles_string())
    }
}

/// Enumerates involutions of `{1..m}` in lexicographic order on one-line
/// notation; `fpf_only` restricts to fixed-point-free ones.
pub fn enumerate_involutions(m: usize, fpf_only: bool) -> Result<Vec<Involution>> {
    if m == 0 || m % 2 != 0 {
        return Err(Error::InvalidInput(format!(
            "ambient size must be a positive even integer, got {m}"
        )));
    }
    let mut out = Vec::new();
    let mut images = vec![0u32; m];
    fill(&mut images, fpf_only, &mut out);
    Ok(out)
}

fn fill(images: &mut Vec<u32>, fpf_only: bool, out: &mut Vec<Involution>) {
    let m = images.len();
    let Some(i) = images.iter().position(|&v| v == 0) else {
        out.push(Involution {
            images: images.clone(),
        });
        return;
    };
    // smallest free position; taking values in increasing order keeps the
    // output lexicographic on one-line notation
    if !fpf_only {
        images[i] = (i + 1) as u32;
        fill(images, fpf_only, out);
        images[i] = 0;
    }
    for j in i + 1..m {
        if images[j] == 0 {
            images[i] = (j + 1) as u32;
            images[j] = (i + 1) as u32;
            fill(images, fpf_only, out);
            images[i] = 0;
            images[j] = 0;
        }
    }
}

/// Number of inversions `#{(i,j) : i<j, w(i)>w(j)}`.
pub fn coxeter_length(w: &Involution) -> usize {
    let v = w.one_line();
    let mut count = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                count += 1;
            }
        }
    }
    count
}

/// `(fixed_points, transpositions)`; they satisfy `f + 2t = m`.
pub fn cycle_stats(w: &Involution) -> (usize, usize) {
    (w.fixed_points(), w.transpositions())
}

/// Prefix-sum rank table `r[i][j] = #{k <= i : w(k) >= j}` for
/// `0 <= i, j <= m` (row 0 is zero; column 0 counts everything).
#[derive(Clone, PartialEq, Eq)]
pub struct RankTable {
    pub m: usize,
    r: Vec<u32>,
}

impl RankTable {
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.r[i * (self.m + 1) + j]
    }
}

pub fn rank_table(w: &Involution) -> RankTable {
    let m = w.size();
    let mut r = vec![0u32; (m + 1) * (m + 1)];
    for i in 1..=m {
        let wi = w.apply(i);
        for j in 0..=m {
            r[i * (m + 1) + j] = r[(i - 1) * (m + 1) + j] + u32::from(wi >= j);
        }
    }
    RankTable { m, r }
}

/// Bruhat order by the rank criterion: `u <= v` iff
/// `r[i][j](u) <= r[i][j](v)` for all `i, j`.
pub fn bruhat_leq(u: &Involution, v: &Involution) -> Result<bool> {
    if u.size() != v.size() {
        return Err(Error::SizeMismatch {
            left: u.size(),
            right: v.size(),
        });
    }
    let (ru, rv) = (rank_table(u), rank_table(v));
    Ok(ru.r.iter().zip(rv.r.iter()).all(|(a, b)| a <= b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(images: &[u32]) -> Involution {
        Involution::new(images.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Involution::new(vec![1, 1]).is_err());
        assert!(Involution::new(vec![2, 3, 1]).is_err()); // 3-cycle
        assert!(enumerate_involutions(3, false).is_err());
        assert!(enumerate_involutions(0, false).is_err());
    }

    #[test]
    fn enumeration_small() {
        let all = enumerate_involutions(2, false).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0], Involution::identity(2));
        assert_eq!(all[1], inv(&[2, 1]));

        assert_eq!(enumerate_involutions(4, false).unwrap().len(), 10);
        assert_eq!(enumerate_involutions(6, true).unwrap().len(), 15);
    }

    #[test]
    fn enumeration_matches_recurrences() {
        // I(m) = I(m-1) + (m-1) I(m-2); fpf count (m-1)!!
        let mut i_prev = 1usize; // I(0)
        let mut i_cur = 1usize; // I(1)
        let mut dfact = 1usize;
        for m in (2..=10).step_by(2) {
            let i_m1 = i_cur + (m - 1 - 1) * i_prev; // I(m-1)
            let i_m = i_m1 + (m - 1) * i_cur; // I(m)
            dfact *= m - 1;
            assert_eq!(enumerate_involutions(m, false).unwrap().len(), i_m);
            assert_eq!(enumerate_involutions(m, true).unwrap().len(), dfact);
            i_prev = i_m1;
            i_cur = i_m;
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_duplicate_free() {
        let all = enumerate_involutions(6, false).unwrap();
        for pair in all.windows(2) {
            assert!(pair[0].one_line() < pair[1].one_line());
        }
        assert!(all.iter().all(|w| Involution::new(w.one_line().to_vec()).is_ok()));
    }

    #[test]
    fn lengths() {
        assert_eq!(coxeter_length(&Involution::identity(4)), 0);
        assert_eq!(coxeter_length(&inv(&[4, 3, 2, 1])), 6);
        assert_eq!(coxeter_length(&inv(&[3, 4, 1, 2])), 4);
    }

    #[test]
    fn stats() {
        assert_eq!(cycle_stats(&Involution::identity(4)), (4, 0));
        assert_eq!(cycle_stats(&inv(&[2, 1, 3, 4])), (2, 1));
        assert_eq!(cycle_stats(&inv(&[2, 1, 4, 3, 6, 5])), (0, 3));
    }

    #[test]
    fn rank_table_entries() {
        let id = Involution::identity(5);
        let r = rank_table(&id);
        for i in 0..=5 {
            assert_eq!(r.get(i, 1), i as u32);
            assert_eq!(r.get(0, i), 0);
        }
        assert_eq!(rank_table(&inv(&[2, 1])).get(1, 2), 1);
        assert_eq!(rank_table(&inv(&[2, 1, 4, 3])).get(2, 2), 1);
    }

    #[test]
    fn rank_table_monotonicity() {
        for w in enumerate_involutions(6, false).unwrap() {
            let r = rank_table(&w);
            assert_eq!(r.get(6, 1), 6);
            for i in 0..=6 {
                for j in 0..6 {
                    assert!(r.get(i, j) >= r.get(i, j + 1));
                    if i < 6 {
                        let d = r.get(i + 1, j) - r.get(i, j);
                        assert!(d <= 1);
                    }
                }
            }
        }
    }

    #[test]
    fn bruhat_examples() {
        let a = inv(&[2, 1, 4, 3]); // (12)(34)
        let b = inv(&[3, 4, 1, 2]); // (13)(24)
        assert!(bruhat_leq(&a, &a).unwrap());
        assert!(bruhat_leq(&a, &b).unwrap());
        assert!(!bruhat_leq(&b, &a).unwrap());
        assert!(bruhat_leq(&a, &Involution::identity(6)).is_err());
    }

    #[test]
    fn bruhat_is_a_partial_order() {
        // exhaustive on m = 4 and 6; m = 8 is covered by the verify suite
        for m in [4usize, 6] {
            let all = enumerate_involutions(m, false).unwrap();
            let n = all.len();
            let mut leq = vec![vec![false; n]; n];
            for i in 0..n {
                for j in 0..n {
                    leq[i][j] = bruhat_leq(&all[i], &all[j]).unwrap();
                }
            }
            for i in 0..n {
                assert!(leq[i][i]);
                for j in 0..n {
                    if leq[i][j] && leq[j][i] {
                        assert_eq!(i, j, "antisymmetry");
                    }
                    if leq[i][j] && i != j {
                        assert!(
                            coxeter_length(&all[i]) < coxeter_length(&all[j]),
                            "length must strictly increase"
                        );
                    }
                    for k in 0..n {
                        if leq[i][j] && leq[j][k] {
                            assert!(leq[i][k], "transitivity");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cycle_notation_round_trip() {
        for w in enumerate_involutions(6, false).unwrap() {
            let s = w.cycles_string();
            assert_eq!(Involution::from_cycles(&s, 6).unwrap(), w);
        }
        let w = Involution::from_cycles("(1 6)(2 5)(3 4)", 6).unwrap();
        assert_eq!(w.one_line(), &[6, 5, 4, 3, 2, 1]);
        assert_eq!(Involution::from_cycles(" ( 1 6 ) (25)", 6).unwrap().apply(2), 5);
        assert!(Involution::from_cycles("(123)", 4).is_err());
        assert!(Involution::from_cycles("(12", 4).is_err());
        assert!(Involution::from_cycles("(17)", 6).is_err());
    }
}
