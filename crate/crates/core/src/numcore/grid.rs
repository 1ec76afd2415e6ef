use crate::error::{domain, Result};

/// Uniform partition of `[a, b]` into `n_cells` cells.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    a: f64,
    b: f64,
    n_cells: usize,
}

impl Grid1D {
    pub fn new(a: f64, b: f64, n_cells: usize) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && b > a) {
            return domain(format!("grid needs finite a < b, got [{a}, {b}]"));
        }
        if n_cells == 0 {
            return domain("grid needs at least one cell");
        }
        Ok(Self { a, b, n_cells })
    }

    /// Grid on the unit interval.
    pub fn unit(n_cells: usize) -> Result<Self> {
        Self::new(0.0, 1.0, n_cells)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn n_cells(&self) -> usize {
        self.n_cells
    }

    pub fn n_nodes(&self) -> usize {
        self.n_cells + 1
    }

    pub fn h(&self) -> f64 {
        (self.b - self.a) / self.n_cells as f64
    }

    pub fn node(&self, i: usize) -> f64 {
        if i == self.n_cells {
            self.b
        } else {
            self.a + i as f64 * self.h()
        }
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n_nodes()).map(|i| self.node(i)).collect()
    }

    /// Piecewise linear hat function centred at node `i`.
    pub fn hat(&self, i: usize, x: f64) -> f64 {
        let h = self.h();
        let d = (x - self.node(i)).abs() / h;
        if d < 1.0 {
            1.0 - d
        } else {
            0.0
        }
    }
}
