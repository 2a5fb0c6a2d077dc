//! Discrete wavenumber lattice for a cubic periodic box.
//!
//! Physical samples live on the uniform grid x = (L/n)*j, j in {0..n-1}^3.
//! Spectral coefficients live on the wavenumber lattice xi = (2*pi/L)*m with
//! m in {-n/2..n/2-1} per axis, stored in natural FFT order
//! 0, 1, ..., n/2-1, -n/2, ..., -1 (axis index order, m1 slowest).

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct Grid {
    n: usize,
    box_length: f64,
    delta_xi: f64,
}

impl PartialEq for Grid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.box_length == other.box_length
    }
}

impl Grid {
    pub fn new(n: usize, box_length: f64) -> Result<Grid> {
        if n % 2 != 0 {
            return Err(Error::OddResolution(n));
        }
        if n < 8 {
            return Err(Error::ResolutionTooSmall(n));
        }
        if !(box_length > 0.0) {
            return Err(Error::NonpositiveBoxLength(box_length));
        }
        Ok(Grid {
            n,
            box_length,
            delta_xi: 2.0 * std::f64::consts::PI / box_length,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn box_length(&self) -> f64 {
        self.box_length
    }

    /// Lattice spacing 2*pi/L, also the smallest nonzero |xi|.
    #[inline]
    pub fn delta_xi(&self) -> f64 {
        self.delta_xi
    }

    /// Physical grid spacing L/n.
    #[inline]
    pub fn dx(&self) -> f64 {
        self.box_length / self.n as f64
    }

    /// Total number of lattice points n^3.
    #[inline]
    pub fn len(&self) -> usize {
        self.n * self.n * self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Largest |xi| along one axis, delta_xi * n/2.
    #[inline]
    pub fn xi_axis_max(&self) -> f64 {
        self.delta_xi * (self.n / 2) as f64
    }

    /// Largest retained |m| per axis under the two-thirds rule.
    #[inline]
    pub fn dealias_limit(&self) -> i64 {
        (self.n / 3) as i64
    }

    /// Signed integer wavenumber for a storage index along one axis.
    #[inline]
    pub fn wavenumber(&self, i: usize) -> i64 {
        if i < self.n / 2 {
            i as i64
        } else {
            i as i64 - self.n as i64
        }
    }

    /// xi component for a storage index along one axis.
    #[inline]
    pub fn xi(&self, i: usize) -> f64 {
        self.delta_xi * self.wavenumber(i) as f64
    }

    #[inline]
    pub fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.n + j) * self.n + k
    }

    /// Storage index of the reflected mode -m (mod n per axis).
    #[inline]
    pub fn reflect(&self, i: usize, j: usize, k: usize) -> usize {
        let n = self.n;
        let r = |a: usize| if a == 0 { 0 } else { n - a };
        self.index(r(i), r(j), r(k))
    }

    /// Decompose a flat storage index into (i, j, k).
    #[inline]
    pub fn unravel(&self, idx: usize) -> (usize, usize, usize) {
        let n = self.n;
        (idx / (n * n), (idx / n) % n, idx % n)
    }
}

/// Constructor matching the operation-level naming.
pub fn make_grid(n: usize, box_length: f64) -> Result<Grid> {
    Grid::new(n, box_length)
}
