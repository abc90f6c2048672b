//! M-PSK signal-set algebra: constellation points, the bit labeling, and the
//! difference constellation with its two-ring partition.

use num_complex::Complex;

use crate::{Error, EPS};

/// Complex baseband amplitude.
pub type ComplexAmplitude = Complex<f64>;

/// Exact Gaussian-integer value. All constellation points and entries of the
/// difference constellation have small integer real and imaginary parts, so
/// membership and orbit computations are done without any floating tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianInt {
    pub re: i32,
    pub im: i32,
}

impl GaussianInt {
    pub const ZERO: GaussianInt = GaussianInt { re: 0, im: 0 };

    pub const fn new(re: i32, im: i32) -> Self {
        GaussianInt { re, im }
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    /// Halves the value if both components are even.
    pub fn half(self) -> Option<GaussianInt> {
        if self.re % 2 == 0 && self.im % 2 == 0 {
            Some(GaussianInt {
                re: self.re / 2,
                im: self.im / 2,
            })
        } else {
            None
        }
    }

    pub fn norm_sqr(self) -> i64 {
        i64::from(self.re) * i64::from(self.re) + i64::from(self.im) * i64::from(self.im)
    }

    pub fn to_complex(self) -> ComplexAmplitude {
        Complex::new(f64::from(self.re), f64::from(self.im))
    }
}

impl std::ops::Mul for GaussianInt {
    type Output = GaussianInt;

    fn mul(self, rhs: GaussianInt) -> GaussianInt {
        GaussianInt {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl std::ops::Sub for GaussianInt {
    type Output = GaussianInt;

    fn sub(self, rhs: GaussianInt) -> GaussianInt {
        GaussianInt {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl std::ops::Neg for GaussianInt {
    type Output = GaussianInt;

    fn neg(self) -> GaussianInt {
        GaussianInt {
            re: -self.re,
            im: -self.im,
        }
    }
}

/// Ordered M-PSK point set with its bit labeling.
#[derive(Debug, Clone, PartialEq)]
pub struct Constellation {
    order: usize,
    points: Vec<GaussianInt>,
    bit_width: usize,
}

/// Gray-order bit labels for M=4: index k carries bits such that adjacent
/// constellation points differ in one bit.
const GRAY4: [[u8; 2]; 4] = [[0, 0], [0, 1], [1, 1], [1, 0]];

impl Constellation {
    /// The symmetric M-PSK constellation. Index `k` carries the point
    /// `e^{j 2 pi k / M}`, so for M=4 the order is `(1, j, -1, -j)`.
    ///
    /// Only M = 2 and M = 4 are supported; larger orders do not admit exact
    /// Gaussian-integer points and are rejected.
    pub fn psk(order: usize) -> Result<Self, Error> {
        let points = match order {
            2 => vec![GaussianInt::new(1, 0), GaussianInt::new(-1, 0)],
            4 => vec![
                GaussianInt::new(1, 0),
                GaussianInt::new(0, 1),
                GaussianInt::new(-1, 0),
                GaussianInt::new(0, -1),
            ],
            m => return Err(Error::UnsupportedOrder(m)),
        };
        Ok(Constellation {
            order,
            points,
            bit_width: order.trailing_zeros() as usize,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bit_width(&self) -> usize {
        self.bit_width
    }

    /// Point at index `k`, as a complex amplitude.
    pub fn point(&self, k: usize) -> ComplexAmplitude {
        self.points[k].to_complex()
    }

    /// Point at index `k`, exact.
    pub fn exact_point(&self, k: usize) -> GaussianInt {
        self.points[k]
    }

    pub fn points(&self) -> impl Iterator<Item = ComplexAmplitude> + '_ {
        self.points.iter().map(|p| p.to_complex())
    }

    /// Constellation index for a bit tuple (Gray labeling for M=4).
    pub fn bits_to_index(&self, bits: &[u8]) -> Result<usize, Error> {
        if bits.len() != self.bit_width {
            return Err(Error::LengthMismatch {
                expected: self.bit_width,
                got: bits.len(),
            });
        }
        match self.order {
            2 => Ok(usize::from(bits[0] & 1)),
            4 => {
                let b = [bits[0] & 1, bits[1] & 1];
                Ok(GRAY4.iter().position(|g| *g == b).unwrap())
            }
            _ => unreachable!(),
        }
    }

    /// Bit tuple carried by constellation index `k`.
    pub fn index_to_bits(&self, k: usize) -> Vec<u8> {
        match self.order {
            2 => vec![k as u8 & 1],
            4 => GRAY4[k].to_vec(),
            _ => unreachable!(),
        }
    }

    /// Map from bits to the transmitted complex symbol.
    pub fn bits_to_symbol(&self, bits: &[u8]) -> Result<ComplexAmplitude, Error> {
        Ok(self.point(self.bits_to_index(bits)?))
    }

    /// Inverse of [`bits_to_symbol`](Self::bits_to_symbol). The symbol must be
    /// within `EPS` of a constellation point.
    pub fn symbol_to_bits(&self, symbol: ComplexAmplitude) -> Result<Vec<u8>, Error> {
        for k in 0..self.order {
            if (self.point(k) - symbol).norm() < EPS {
                return Ok(self.index_to_bits(k));
            }
        }
        Err(Error::LengthMismatch {
            expected: self.bit_width,
            got: 0,
        })
    }

    /// The difference constellation of the M=4 point set.
    pub fn difference_set(&self) -> DifferenceSet {
        let mut all = Vec::new();
        for &a in &self.points {
            for &b in &self.points {
                let d = a - b;
                if !all.contains(&d) {
                    all.push(d);
                }
            }
        }
        all.sort();
        let d1: Vec<_> = all.iter().copied().filter(|d| d.norm_sqr() == 2).collect();
        let d2: Vec<_> = all.iter().copied().filter(|d| d.norm_sqr() == 4).collect();
        DifferenceSet { all, d1, d2 }
    }
}

/// The difference constellation `D = {0} ∪ D1 ∪ D2`. For M=4, `D1 = {±1±j}`
/// (modulus √2) and `D2 = {±2, ±2j}` (modulus 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceSet {
    all: Vec<GaussianInt>,
    d1: Vec<GaussianInt>,
    d2: Vec<GaussianInt>,
}

impl DifferenceSet {
    pub fn all(&self) -> &[GaussianInt] {
        &self.all
    }

    pub fn d1(&self) -> &[GaussianInt] {
        &self.d1
    }

    pub fn d2(&self) -> &[GaussianInt] {
        &self.d2
    }

    pub fn contains(&self, d: GaussianInt) -> bool {
        self.all.contains(&d)
    }

    /// Polar form `2 sin(pi n / 4) e^{j phi}` of a nonzero element: returns
    /// `(n, phi)` with `n = 1` for the inner ring and `n = 2` for the outer.
    pub fn polar(&self, d: GaussianInt) -> Option<(u8, f64)> {
        let n = match d.norm_sqr() {
            2 => 1,
            4 => 2,
            _ => return None,
        };
        Some((n, d.to_complex().arg()))
    }
}

/// Membership tests against the fixed M=4 difference constellation.
pub(crate) fn in_d1(d: GaussianInt) -> bool {
    d.norm_sqr() == 2
}

pub(crate) fn in_d1_or_d2(d: GaussianInt) -> bool {
    let n = d.norm_sqr();
    (n == 2 && d.re.abs() == 1) || (n == 4 && (d.re == 0 || d.im == 0))
}
