//! Symmetric banded storage and a banded Cholesky solver.

/// Symmetric matrix storing the diagonal and `bandwidth` super-diagonals.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricBanded {
    n: usize,
    bandwidth: usize,
    // row-major: data[i * (bandwidth + 1) + (j - i)] for i <= j <= i + bandwidth
    data: Vec<f64>,
}

/// Failure of the Cholesky factorization at a given row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NotPositiveDefinite {
    pub index: usize,
    pub pivot: f64,
}

impl SymmetricBanded {
    pub fn zeros(n: usize, bandwidth: usize) -> Self {
        Self {
            n,
            bandwidth,
            data: vec![0.0; n * (bandwidth + 1)],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Number of stored super-diagonals.
    pub fn bandwidth(&self) -> usize {
        self.bandwidth
    }

    fn slot(&self, i: usize, j: usize) -> Option<usize> {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        (j - i <= self.bandwidth && j < self.n).then(|| i * (self.bandwidth + 1) + (j - i))
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.slot(i, j).map_or(0.0, |s| self.data[s])
    }

    /// Adds `v` to entry `(i, j)` (and implicitly `(j, i)`).
    ///
    /// # Panics
    /// If `(i, j)` lies outside the band.
    pub fn add(&mut self, i: usize, j: usize, v: f64) {
        let s = self
            .slot(i, j)
            .unwrap_or_else(|| panic!("entry ({i}, {j}) outside bandwidth {}", self.bandwidth));
        self.data[s] += v;
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        let mut y = vec![0.0; self.n];
        for i in 0..self.n {
            let hi = (i + self.bandwidth).min(self.n - 1);
            y[i] += self.get(i, i) * x[i];
            for j in i + 1..=hi {
                let a = self.get(i, j);
                y[i] += a * x[j];
                y[j] += a * x[i];
            }
        }
        y
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            s += self.get(i, i).powi(2);
            for j in i + 1..=(i + self.bandwidth).min(self.n.saturating_sub(1)) {
                s += 2.0 * self.get(i, j).powi(2);
            }
        }
        s.sqrt()
    }

    /// Submatrix keeping the given (ascending) indices.
    pub fn select(&self, keep: &[usize]) -> Self {
        let n = keep.len();
        let mut bw = 0;
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate().skip(a + 1) {
                if j - i > self.bandwidth {
                    break;
                }
                bw = bw.max(b - a);
            }
        }
        let mut out = Self::zeros(n, bw);
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate().skip(a).take(bw + 1) {
                let v = self.get(i, j);
                if v != 0.0 {
                    out.add(a, b, v);
                }
            }
        }
        out
    }

    /// Factors `A = L Lᵀ` in place of a copy and returns the factor.
    pub fn cholesky(&self) -> Result<BandedCholesky, NotPositiveDefinite> {
        let (n, bw) = (self.n, self.bandwidth);
        // lower factor stored by rows: l[i][k] for max(0, i - bw) <= k <= i
        let w = bw + 1;
        let mut l = vec![0.0; n * w];
        let at = |i: usize, k: usize| i * w + (k + bw - i);
        for i in 0..n {
            let lo = i.saturating_sub(bw);
            for j in lo..=i {
                let mut s = self.get(i, j);
                for k in i.saturating_sub(bw).max(j.saturating_sub(bw))..j {
                    s -= l[at(i, k)] * l[at(j, k)];
                }
                if i == j {
                    if s.is_nan() || s <= 0.0 || !s.is_finite() {
                        return Err(NotPositiveDefinite { index: i, pivot: s });
                    }
                    l[at(i, i)] = s.sqrt();
                } else {
                    l[at(i, j)] = s / l[at(j, j)];
                }
            }
        }
        Ok(BandedCholesky { n, bw, l })
    }
}

/// Lower-triangular banded Cholesky factor.
#[derive(Debug, Clone)]
pub struct BandedCholesky {
    n: usize,
    bw: usize,
    l: Vec<f64>,
}

impl BandedCholesky {
    fn at(&self, i: usize, k: usize) -> f64 {
        self.l[i * (self.bw + 1) + (k + self.bw - i)]
    }

    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        assert_eq!(b.len(), self.n);
        let mut y = b.to_vec();
        for i in 0..self.n {
            let mut s = y[i];
            for k in i.saturating_sub(self.bw)..i {
                s -= self.at(i, k) * y[k];
            }
            y[i] = s / self.at(i, i);
        }
        for i in (0..self.n).rev() {
            let mut s = y[i];
            for k in i + 1..=(i + self.bw).min(self.n - 1) {
                s -= self.at(k, i) * y[k];
            }
            y[i] = s / self.at(i, i);
        }
        y
    }
}
