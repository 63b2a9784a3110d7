use num_complex::Complex64;

use super::orbit::{eval_orbit, OrbitStatus};
use crate::{par, Error, Result};

/// Rectangle in the complex `t`-plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Window {
    pub fn square(half_width: f64) -> Self {
        Window {
            re_min: -half_width,
            re_max: half_width,
            im_min: -half_width,
            im_max: half_width,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridCell {
    pub t: Complex64,
    pub status: OrbitStatus,
    /// `x(t)`, only when the orbit converged.
    pub x: Option<Complex64>,
    /// `|1 - t - x(t)|`.
    pub abs_f: Option<f64>,
    pub arg_x: Option<f64>,
}

/// Cells in row-major order: `cells[j * nx + i]` sits at
/// `re_min + i (re_max - re_min)/(nx - 1)`, `im_min + j (im_max - im_min)/(ny - 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GridScan {
    pub window: Window,
    pub nx: usize,
    pub ny: usize,
    pub cells: Vec<GridCell>,
}

impl GridScan {
    pub fn cell(&self, i: usize, j: usize) -> &GridCell {
        &self.cells[j * self.nx + i]
    }

    /// CSV with header `re,im,status,x_re,x_im,abs_f,arg_x`; fields past
    /// `status` are empty for cells that did not converge.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["re", "im", "status", "x_re", "x_im", "abs_f", "arg_x"])?;
        let opt = |v: Option<f64>| v.map(|v| format!("{v:e}")).unwrap_or_default();
        for c in &self.cells {
            w.write_record([
                format!("{:e}", c.t.re),
                format!("{:e}", c.t.im),
                c.status.code().to_string(),
                opt(c.x.map(|x| x.re)),
                opt(c.x.map(|x| x.im)),
                opt(c.abs_f),
                opt(c.arg_x),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

fn validate(window: &Window, nx: usize, ny: usize) -> Result<()> {
    let finite = [window.re_min, window.re_max, window.im_min, window.im_max]
        .iter()
        .all(|v| v.is_finite());
    if !finite || window.re_min >= window.re_max || window.im_min >= window.im_max {
        return Err(Error::InvalidArgument(format!("bad window {window:?}")));
    }
    if nx < 2 || ny < 2 {
        return Err(Error::InvalidArgument(
            "resolution must be at least 2x2".into(),
        ));
    }
    Ok(())
}

fn cell_at(
    window: &Window,
    nx: usize,
    ny: usize,
    tol: f64,
    max_iter: usize,
    idx: usize,
) -> GridCell {
    let (i, j) = (idx % nx, idx / nx);
    let re = window.re_min + (window.re_max - window.re_min) * i as f64 / (nx - 1) as f64;
    let im = window.im_min + (window.im_max - window.im_min) * j as f64 / (ny - 1) as f64;
    let t = Complex64::new(re, im);
    let r = eval_orbit(t, tol, max_iter, false);
    let x = r.converged().then_some(r.x);
    GridCell {
        t,
        status: r.status,
        x,
        abs_f: x.map(|x| (1.0 - t - x).norm()),
        arg_x: x.map(|x| x.arg()),
    }
}

/// Evaluates `x(t)` over an `nx` by `ny` lattice covering `window`.
/// Uses rayon when the `parallel` feature is on; output order is by cell index.
pub fn scan_grid(
    window: Window,
    nx: usize,
    ny: usize,
    tol: f64,
    max_iter: usize,
) -> Result<GridScan> {
    validate(&window, nx, ny)?;
    let cells = par::map_indexed(nx * ny, |idx| cell_at(&window, nx, ny, tol, max_iter, idx));
    Ok(GridScan {
        window,
        nx,
        ny,
        cells,
    })
}

pub fn scan_grid_sequential(
    window: Window,
    nx: usize,
    ny: usize,
    tol: f64,
    max_iter: usize,
) -> Result<GridScan> {
    validate(&window, nx, ny)?;
    let cells =
        par::map_indexed_sequential(nx * ny, |idx| cell_at(&window, nx, ny, tol, max_iter, idx));
    Ok(GridScan {
        window,
        nx,
        ny,
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::{DEFAULT_MAX_ITER, DEFAULT_TOL};

    #[test]
    fn origin_cell() {
        let g = scan_grid(Window::square(1.0), 3, 3, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        let c = g.cell(1, 1);
        assert_eq!(c.t, Complex64::new(0.0, 0.0));
        assert_eq!(c.status, OrbitStatus::Converged);
        assert_eq!(c.abs_f, Some(1.0));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(scan_grid(Window::square(1.0), 1, 5, 1e-16, 10).is_err());
        let w = Window {
            re_min: 1.0,
            re_max: 0.0,
            im_min: 0.0,
            im_max: 1.0,
        };
        assert!(scan_grid(w, 4, 4, 1e-16, 10).is_err());
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let w = Window::square(1.5);
        let a = scan_grid(w, 17, 13, DEFAULT_TOL, 2_000).unwrap();
        let b = scan_grid_sequential(w, 17, 13, DEFAULT_TOL, 2_000).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_csv().unwrap(), b.to_csv().unwrap());
    }

    #[test]
    fn csv_layout() {
        let g = scan_grid(Window::square(2.0), 2, 2, DEFAULT_TOL, 100).unwrap();
        let csv = g.to_csv().unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("re,im,status,x_re,x_im,abs_f,arg_x"));
        // corners have |t| = 2 sqrt 2 and diverge at the first iterate
        assert!(lines.all(|l| l.split(',').nth(2) == Some("D") && l.ends_with(",,,,")));
    }
}
