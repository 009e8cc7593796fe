//! 2x2 matrix representation over Gaussian rationals: the oracle grounding
//! the abstract engine in the concrete algebra of the three base matrices
//! sigma_x, sigma_y, sigma_z.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::element::GradedElement;
use crate::error::{Error, Result};
use crate::Rational;

/// Exact Gaussian rational.
pub type GaussianRational = Complex<Rational>;

/// A 2x2 matrix over Gaussian rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix2(pub [[GaussianRational; 2]; 2]);

impl Matrix2 {
    pub fn zero() -> Self {
        let z = GaussianRational::zero();
        Matrix2([[z.clone(), z.clone()], [z.clone(), z]])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        m.0[0][0] = GaussianRational::one();
        m.0[1][1] = GaussianRational::one();
        m
    }

    pub fn diagonal(a: Rational, b: Rational) -> Self {
        let mut m = Self::zero();
        m.0[0][0] = GaussianRational::from(a);
        m.0[1][1] = GaussianRational::from(b);
        m
    }

    pub fn mul(&self, other: &Matrix2) -> Matrix2 {
        let mut out = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = GaussianRational::zero();
                for k in 0..2 {
                    acc += self.0[i][k].clone() * other.0[k][j].clone();
                }
                out.0[i][j] = acc;
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix2) -> Matrix2 {
        let mut out = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[i][j].clone() + other.0[i][j].clone();
            }
        }
        out
    }

    pub fn scale(&self, factor: &GaussianRational) -> Matrix2 {
        let mut out = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[i][j].clone() * factor.clone();
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Matrix2 {
        let mut acc = Matrix2::identity();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Zero::is_zero)
    }
}

/// The three base matrices plus the identity, with the defining relations
/// checked at construction: each squares to the identity and distinct ones
/// anticommute.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    sigma: [Matrix2; 3],
    identity: Matrix2,
}

impl MatrixRep {
    pub fn new() -> Self {
        let one = Rational::one();
        let i = GaussianRational::new(Rational::zero(), one.clone());
        let r = |v: &Rational| GaussianRational::from(v.clone());

        let mut sx = Matrix2::zero();
        sx.0[0][1] = r(&one);
        sx.0[1][0] = r(&one);

        let mut sy = Matrix2::zero();
        sy.0[0][1] = -i.clone();
        sy.0[1][0] = i;

        let mut sz = Matrix2::zero();
        sz.0[0][0] = r(&one);
        sz.0[1][1] = -r(&one);

        let rep = MatrixRep {
            sigma: [sx, sy, sz],
            identity: Matrix2::identity(),
        };
        for a in 0..3 {
            assert!(
                rep.sigma[a].mul(&rep.sigma[a]) == rep.identity,
                "sigma_{a} must square to the identity"
            );
            for b in (a + 1)..3 {
                let anti = rep.sigma[a]
                    .mul(&rep.sigma[b])
                    .add(&rep.sigma[b].mul(&rep.sigma[a]));
                assert!(anti.is_zero(), "sigma_{a} and sigma_{b} must anticommute");
            }
        }
        rep
    }

    pub fn sigma(&self, position: usize) -> &Matrix2 {
        &self.sigma[position]
    }

    pub fn identity(&self) -> &Matrix2 {
        &self.identity
    }
}

impl Default for MatrixRep {
    fn default() -> Self {
        Self::new()
    }
}

/// Evaluates a polynomial element in the matrix algebra, substituting
/// `values[i] * sigma_i` for generator `g_i`. Terms are normal-ordered
/// words, so evaluation multiplies the per-generator matrix powers in
/// position order. This is a homomorphism precisely for anticommutative
/// elements, which is what makes it an oracle for the engine's sign rule.
pub fn matrix_eval(x: &GradedElement, values: &[Rational]) -> Result<Matrix2> {
    if x.laurent().is_some() {
        return Err(Error::LaurentInput);
    }
    if x.dim() > 3 {
        return Err(Error::InvalidDimension(x.dim()));
    }
    if values.len() != x.dim() {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: values.len(),
        });
    }
    let rep = MatrixRep::new();
    let mut acc = Matrix2::zero();
    for (idx, coeff) in x.terms() {
        let mut word = Matrix2::identity();
        let mut scalar = coeff.clone();
        for (pos, &e) in idx.exponents().iter().enumerate() {
            debug_assert!(e >= 0);
            let e = e as u32;
            word = word.mul(&rep.sigma(pos).pow(e));
            scalar *= pow_rational(&values[pos], e);
        }
        acc = acc.add(&word.scale(&GaussianRational::from(scalar)));
    }
    Ok(acc)
}

/// Evaluates a polynomial element with plain scalar substitution
/// `g_i -> values[i]`. This is the commuting counterpart of [`matrix_eval`]:
/// two scalar evaluations assemble the diagonal-matrix oracle for
/// commutative-mode powers.
pub fn scalar_eval(x: &GradedElement, values: &[Rational]) -> Result<Rational> {
    if x.laurent().is_some() {
        return Err(Error::LaurentInput);
    }
    if values.len() != x.dim() {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: values.len(),
        });
    }
    let mut acc = Rational::zero();
    for (idx, coeff) in x.terms() {
        let mut term = coeff.clone();
        for (pos, &e) in idx.exponents().iter().enumerate() {
            term *= pow_rational(&values[pos], e as u32);
        }
        acc += term;
    }
    Ok(acc)
}

fn pow_rational(base: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}
