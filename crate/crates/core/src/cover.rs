//! Orbit-level model of the double cover GL(2n)/SO(2n) -> GL(2n)/O(2n):
//! the splitting criterion, stabilizer component groups, and the stratum
//! fibrations f_i with their pullbacks.

use serde::{Deserialize, Serialize};

use crate::orbit::Orbit;
use crate::perm::Involution;
use crate::{Error, Result};

/// Lift of a base orbit through the double cover. When the base orbit is
/// fixed-point-free its preimage splits into two orbits distinguished only
/// by a sign; otherwise the preimage is a single orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverLift {
    pub base: Orbit,
    pub split: bool,
    /// Meaningful only when `split`; swapping all signs is a symmetry.
    pub sign: Option<Sign>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl CoverLift {
    pub fn of(base: Orbit, sign: Sign) -> Self {
        let split = base.fpf;
        CoverLift {
            base,
            split,
            sign: split.then_some(sign),
        }
    }
}

/// The fibration f_i : X_i -> GL(2n-2)/SO(2n-2) and its fiber dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrationSpec {
    pub n: usize,
    pub i: usize,
    pub fiber_dim: usize,
}

impl FibrationSpec {
    pub fn new(n: usize, i: usize) -> Result<Self> {
        Ok(FibrationSpec {
            n,
            i,
            fiber_dim: fiber_dimension(n, i)?,
        })
    }
}

/// The preimage of the orbit of `w` splits iff `w` is fixed-point-free.
pub fn orbit_splits(w: &Involution) -> bool {
    w.is_fpf()
}

/// Order of the component group of the torus stabilizer of the orbit
/// representative: `2^l` where `l` is the number of fixed points.
pub fn stabilizer_component_order(w: &Involution) -> u64 {
    1u64 << w.fixed_points()
}

/// Image of the orbit of `w` under f_i where `i = w(2n)`: delete the
/// 2-cycle {i, 2n} and relabel the remaining letters order-preservingly.
pub fn fibration_image(w: &Involution) -> Result<Involution> {
    let m = w.size();
    let i = w.apply(m);
    if i == m {
        return Err(Error::FibrationUndefined);
    }
    let keep: Vec<usize> = (1..=m).filter(|&k| k != i && k != m).collect();
    let pos = position_map(m, &keep);
    let images = keep.iter().map(|&k| pos[w.apply(k)] as u32).collect();
    Involution::new(images)
}

/// Inverse of `fibration_image`: transport `w_prime` onto
/// `{1..2n} \ {i, 2n}` order-preservingly and adjoin the 2-cycle (i, 2n).
pub fn fibration_pullback(n: usize, i: usize, w_prime: &Involution) -> Result<Involution> {
    let m = 2 * n;
    if i < 1 || i >= m {
        return Err(Error::InvalidInput(format!(
            "stratum index {i} out of range 1..{}",
            m - 1
        )));
    }
    if w_prime.size() != m - 2 {
        return Err(Error::SizeMismatch {
            left: w_prime.size(),
            right: m - 2,
        });
    }
    let keep: Vec<usize> = (1..=m).filter(|&k| k != i && k != m).collect();
    let mut images = vec![0u32; m];
    for (t, &k) in keep.iter().enumerate() {
        images[k - 1] = keep[w_prime.apply(t + 1) - 1] as u32;
    }
    images[i - 1] = m as u32;
    images[m - 1] = i as u32;
    Involution::new(images)
}

fn position_map(m: usize, keep: &[usize]) -> Vec<usize> {
    let mut pos = vec![0usize; m + 1];
    for (t, &k) in keep.iter().enumerate() {
        pos[k] = t + 1;
    }
    pos
}

/// Dimension of the fibers of f_i: `2n + i - 1` (an open torus factor plus
/// an affine factor of dimension 2n + i - 2).
pub fn fiber_dimension(n: usize, i: usize) -> Result<usize> {
    if n == 0 || i < 1 || i > 2 * n - 1 {
        return Err(Error::InvalidInput(format!(
            "stratum index {i} out of range 1..{}",
            2 * n - 1
        )));
    }
    Ok(2 * n + i - 1)
}

/// The largest fixed-point-free orbit's involution (12)(34)...(2n-1 2n),
/// the iterated pullback of (12); its codimension is n.
pub fn survivor_involution(n: usize) -> Involution {
    let mut images = Vec::with_capacity(2 * n);
    for k in 1..=n {
        images.push(2 * k as u32);
        images.push(2 * k as u32 - 1);
    }
    Involution::new(images).expect("survivor is an involution")
}
