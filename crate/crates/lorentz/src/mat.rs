//! 4x4 matrix and 4-vector arithmetic, hand rolled: the sizes are fixed and
//! tiny, so a dense [f64; 16] with explicit loops beats pulling in a linear
//! algebra dependency.

/// Row-major 4x4 real matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat4(pub [f64; 16]);

/// Real 4-vector, index 0 is the time coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec4(pub [f64; 4]);

impl Mat4 {
    pub const ZERO: Mat4 = Mat4([0.0; 16]);

    pub fn identity() -> Mat4 {
        let mut m = [0.0; 16];
        m[0] = 1.0;
        m[5] = 1.0;
        m[10] = 1.0;
        m[15] = 1.0;
        Mat4(m)
    }

    /// Minkowski metric diag(1, -1, -1, -1).
    pub fn minkowski() -> Mat4 {
        let mut m = [0.0; 16];
        m[0] = 1.0;
        m[5] = -1.0;
        m[10] = -1.0;
        m[15] = -1.0;
        Mat4(m)
    }

    pub fn at(&self, r: usize, c: usize) -> f64 {
        self.0[r * 4 + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.0[r * 4 + c] = v;
    }

    pub fn mul(&self, other: &Mat4) -> Mat4 {
        let mut out = [0.0; 16];
        for r in 0..4 {
            for c in 0..4 {
                let mut s = 0.0;
                for k in 0..4 {
                    s += self.at(r, k) * other.at(k, c);
                }
                out[r * 4 + c] = s;
            }
        }
        Mat4(out)
    }

    pub fn transpose(&self) -> Mat4 {
        let mut out = [0.0; 16];
        for r in 0..4 {
            for c in 0..4 {
                out[c * 4 + r] = self.at(r, c);
            }
        }
        Mat4(out)
    }

    pub fn apply(&self, v: &Vec4) -> Vec4 {
        let mut out = [0.0; 4];
        for r in 0..4 {
            let mut s = 0.0;
            for c in 0..4 {
                s += self.at(r, c) * v.0[c];
            }
            out[r] = s;
        }
        Vec4(out)
    }

    pub fn add(&self, other: &Mat4) -> Mat4 {
        let mut out = [0.0; 16];
        for i in 0..16 {
            out[i] = self.0[i] + other.0[i];
        }
        Mat4(out)
    }

    pub fn sub(&self, other: &Mat4) -> Mat4 {
        let mut out = [0.0; 16];
        for i in 0..16 {
            out[i] = self.0[i] - other.0[i];
        }
        Mat4(out)
    }

    pub fn scale(&self, s: f64) -> Mat4 {
        let mut out = [0.0; 16];
        for i in 0..16 {
            out[i] = self.0[i] * s;
        }
        Mat4(out)
    }

    pub fn trace(&self) -> f64 {
        self.at(0, 0) + self.at(1, 1) + self.at(2, 2) + self.at(3, 3)
    }

    /// Largest absolute entry of the difference, the norm used for residuals.
    pub fn max_abs_diff(&self, other: &Mat4) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..16 {
            m = m.max((self.0[i] - other.0[i]).abs());
        }
        m
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }
}

impl Vec4 {
    pub fn max_abs_diff(&self, other: &Vec4) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..4 {
            m = m.max((self.0[i] - other.0[i]).abs());
        }
        m
    }

    pub fn add(&self, other: &Vec4) -> Vec4 {
        Vec4([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
            self.0[3] + other.0[3],
        ])
    }

    pub fn neg(&self) -> Vec4 {
        Vec4([-self.0[0], -self.0[1], -self.0[2], -self.0[3]])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let m = Mat4([
            1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0, 11.0, 12.0, 13.0, 14.0, 15.0,
            16.0,
        ]);
        assert_eq!(m.mul(&Mat4::identity()), m);
        assert_eq!(Mat4::identity().mul(&m), m);
    }

    #[test]
    fn transpose_involutive() {
        let m = Mat4([
            1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0, 11.0, 12.0, 13.0, 14.0, 15.0,
            16.0,
        ]);
        assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn minkowski_squares_to_identity() {
        let eta = Mat4::minkowski();
        assert_eq!(eta.mul(&eta), Mat4::identity());
    }
}
