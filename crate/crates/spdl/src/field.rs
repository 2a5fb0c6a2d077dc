//! Spectral scalar and vector fields, transforms, dealiasing and the
//! pseudo-spectral convolution.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fft;
use crate::grid::Grid;

/// Complex Fourier coefficients of one scalar component.
#[derive(Debug, Clone)]
pub struct SpectralField {
    grid: Grid,
    coeffs: Vec<Complex64>,
    hermitian: bool,
}

impl SpectralField {
    pub fn zero(grid: Grid) -> Self {
        SpectralField {
            grid,
            coeffs: vec![Complex64::default(); grid.len()],
            hermitian: true,
        }
    }

    pub fn from_coeffs(grid: Grid, coeffs: Vec<Complex64>, hermitian: bool) -> Result<Self> {
        if coeffs.len() != grid.len() {
            return Err(Error::ShapeMismatch {
                expected: grid.len(),
                got: coeffs.len(),
            });
        }
        Ok(SpectralField {
            grid,
            coeffs,
            hermitian,
        })
    }

    #[inline]
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    #[inline]
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    #[inline]
    pub fn coeffs_mut(&mut self) -> &mut [Complex64] {
        &mut self.coeffs
    }

    /// Whether this field claims to represent a real-valued physical field.
    #[inline]
    pub fn hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn set_hermitian(&mut self, value: bool) {
        self.hermitian = value;
    }

    /// Largest |coeffs(m) - conj(coeffs(-m))| over the lattice.
    pub fn hermitian_defect(&self) -> f64 {
        let n = self.grid.n();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let a = self.coeffs[self.grid.index(i, j, k)];
                    let b = self.coeffs[self.grid.reflect(i, j, k)];
                    worst = worst.max((a - b.conj()).norm());
                }
            }
        }
        worst
    }

    pub fn to_physical(&self) -> Vec<f64> {
        fft::inverse_real(&self.grid, &self.coeffs)
    }

    pub fn scale(&mut self, c: f64) {
        self.coeffs.par_iter_mut().for_each(|v| *v *= c);
    }
}

/// Forward transform of real physical samples.
pub fn forward_transform(grid: Grid, samples: &[f64]) -> Result<SpectralField> {
    if samples.len() != grid.len() {
        return Err(Error::ShapeMismatch {
            expected: grid.len(),
            got: samples.len(),
        });
    }
    Ok(SpectralField {
        grid,
        coeffs: fft::forward_real(&grid, samples),
        hermitian: true,
    })
}

/// Inverse transform to real physical samples.
pub fn inverse_transform(f: &SpectralField) -> Vec<f64> {
    f.to_physical()
}

/// Zeroes every mode with any |m_j| > n/3, in place. Idempotent.
pub fn dealias_in_place(f: &mut SpectralField) {
    let grid = *f.grid();
    let n = grid.n();
    let kmax = grid.dealias_limit();
    f.coeffs_mut()
        .par_chunks_mut(n * n)
        .enumerate()
        .for_each(|(i, plane)| {
            let mi = grid.wavenumber(i).abs();
            for j in 0..n {
                let mj = grid.wavenumber(j).abs();
                for k in 0..n {
                    let mk = grid.wavenumber(k).abs();
                    if mi > kmax || mj > kmax || mk > kmax {
                        plane[j * n + k] = Complex64::default();
                    }
                }
            }
        });
}

pub fn dealias(f: &SpectralField) -> SpectralField {
    let mut out = f.clone();
    dealias_in_place(&mut out);
    out
}

/// Transform of the pointwise physical product of two fields, dealiased.
///
/// On retained modes this equals the lattice convolution
/// (2 pi)^{-3} (delta_xi)^3 sum_eta f_hat(eta) g_hat(xi - eta)
/// with periodic index wraparound.
pub fn spectral_convolution(f: &SpectralField, g: &SpectralField) -> Result<SpectralField> {
    if f.grid() != g.grid() {
        return Err(Error::GridMismatch);
    }
    let grid = *f.grid();
    let hermitian = f.hermitian() && g.hermitian();
    let mut out = if hermitian {
        // Real physical fields: one packed inverse covers both inputs.
        let (fp, gp) = fft::inverse_real_pair(&grid, f.coeffs(), g.coeffs());
        let prod: Vec<f64> = fp.par_iter().zip(gp.par_iter()).map(|(a, b)| a * b).collect();
        forward_transform(grid, &prod)?
    } else {
        let fp = fft::inverse_complex(&grid, f.coeffs());
        let gp = fft::inverse_complex(&grid, g.coeffs());
        let prod: Vec<num_complex::Complex64> =
            fp.par_iter().zip(gp.par_iter()).map(|(a, b)| a * b).collect();
        SpectralField::from_coeffs(grid, fft::forward_complex(&grid, &prod), false)?
    };
    dealias_in_place(&mut out);
    out.set_hermitian(hermitian);
    Ok(out)
}

/// Three spectral components of a 3D vector field on a shared grid.
#[derive(Debug, Clone)]
pub struct VectorField {
    comps: [SpectralField; 3],
    divergence_free: bool,
}

impl VectorField {
    pub fn zero(grid: Grid) -> Self {
        VectorField {
            comps: [
                SpectralField::zero(grid),
                SpectralField::zero(grid),
                SpectralField::zero(grid),
            ],
            divergence_free: true,
        }
    }

    pub fn from_components(comps: [SpectralField; 3], divergence_free: bool) -> Result<Self> {
        if comps[0].grid() != comps[1].grid() || comps[0].grid() != comps[2].grid() {
            return Err(Error::GridMismatch);
        }
        Ok(VectorField {
            comps,
            divergence_free,
        })
    }

    #[inline]
    pub fn grid(&self) -> &Grid {
        self.comps[0].grid()
    }

    #[inline]
    pub fn comp(&self, c: usize) -> &SpectralField {
        &self.comps[c]
    }

    #[inline]
    pub fn comp_mut(&mut self, c: usize) -> &mut SpectralField {
        &mut self.comps[c]
    }

    #[inline]
    pub fn divergence_free(&self) -> bool {
        self.divergence_free
    }

    pub fn set_divergence_free(&mut self, value: bool) {
        self.divergence_free = value;
    }

    pub fn hermitian(&self) -> bool {
        self.comps.iter().all(|c| c.hermitian())
    }

    /// max_xi |xi . v_hat| / max_xi |xi| |v_hat|, the scale-free divergence
    /// residual; 0 for the zero field.
    pub fn divergence_residual(&self) -> f64 {
        let grid = *self.grid();
        let n = grid.n();
        let (num, den) = (0..n)
            .into_par_iter()
            .map(|i| {
                let xi0 = grid.xi(i);
                let mut num: f64 = 0.0;
                let mut den: f64 = 0.0;
                for j in 0..n {
                    let xi1 = grid.xi(j);
                    for k in 0..n {
                        let xi2 = grid.xi(k);
                        let idx = grid.index(i, j, k);
                        let v0 = self.comps[0].coeffs()[idx];
                        let v1 = self.comps[1].coeffs()[idx];
                        let v2 = self.comps[2].coeffs()[idx];
                        let div = xi0 * v0 + xi1 * v1 + xi2 * v2;
                        let norm2 = v0.norm_sqr() + v1.norm_sqr() + v2.norm_sqr();
                        let r = (xi0 * xi0 + xi1 * xi1 + xi2 * xi2).sqrt();
                        num = num.max(div.norm());
                        den = den.max(r * norm2.sqrt());
                    }
                }
                (num, den)
            })
            .reduce(|| (0.0, 0.0), |a, b| (a.0.max(b.0), a.1.max(b.1)));
        if den == 0.0 {
            0.0
        } else {
            num / den
        }
    }

    pub fn to_physical(&self) -> [Vec<f64>; 3] {
        let grid = self.grid();
        let (p0, p1) = fft::inverse_real_pair(grid, self.comps[0].coeffs(), self.comps[1].coeffs());
        let p2 = self.comps[2].to_physical();
        [p0, p1, p2]
    }

    /// Largest pointwise |v(x)| on the physical grid.
    pub fn max_pointwise(&self) -> f64 {
        let [p0, p1, p2] = self.to_physical();
        p0.par_iter()
            .zip(p1.par_iter())
            .zip(p2.par_iter())
            .map(|((a, b), c)| (a * a + b * b + c * c).sqrt())
            .reduce(|| 0.0, f64::max)
    }

    pub fn scale(&mut self, c: f64) {
        for comp in &mut self.comps {
            comp.scale(c);
        }
    }

    /// self += c * other, componentwise over coefficients.
    pub fn add_scaled(&mut self, other: &VectorField, c: f64) {
        for (mine, theirs) in self.comps.iter_mut().zip(other.comps.iter()) {
            mine.coeffs_mut()
                .par_iter_mut()
                .zip(theirs.coeffs().par_iter())
                .for_each(|(a, b)| *a += c * b);
        }
    }

    pub fn dealias_in_place(&mut self) {
        for comp in &mut self.comps {
            dealias_in_place(comp);
        }
    }

    pub fn hermitian_defect(&self) -> f64 {
        self.comps
            .iter()
            .map(|c| c.hermitian_defect())
            .fold(0.0, f64::max)
    }
}
