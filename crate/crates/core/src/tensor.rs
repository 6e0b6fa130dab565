//! Spintensors: multi-index arrays over spinor space with four index kinds.
//!
//! Every axis is classified as upper, dotted upper, lower, or dotted lower.
//! Dotted indexes transform with the complex conjugate matrices of their
//! undotted counterparts. Axes are stored grouped by class in the order
//! upper, dotted upper, lower, dotted lower.

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::scalar::Scalar;
use crate::spinor::{BasisChange, Spinor};
use num_complex::Complex;

/// Index classification for one spintensor axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisClass {
    Upper,
    UpperDotted,
    Lower,
    LowerDotted,
}

/// Axis counts per class: (upper, dotted upper, lower, dotted lower).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Valency {
    pub upper: usize,
    pub upper_dotted: usize,
    pub lower: usize,
    pub lower_dotted: usize,
}

impl Valency {
    pub fn new(upper: usize, upper_dotted: usize, lower: usize, lower_dotted: usize) -> Self {
        Self {
            upper,
            upper_dotted,
            lower,
            lower_dotted,
        }
    }

    /// Total number of axes.
    pub fn rank(&self) -> usize {
        self.upper + self.upper_dotted + self.lower + self.lower_dotted
    }

    /// Class of the axis at a global position (class-grouped ordering).
    pub fn class_of(&self, axis: usize) -> Result<AxisClass> {
        let mut edge = self.upper;
        if axis < edge {
            return Ok(AxisClass::Upper);
        }
        edge += self.upper_dotted;
        if axis < edge {
            return Ok(AxisClass::UpperDotted);
        }
        edge += self.lower;
        if axis < edge {
            return Ok(AxisClass::Lower);
        }
        edge += self.lower_dotted;
        if axis < edge {
            return Ok(AxisClass::LowerDotted);
        }
        Err(Error::Axis {
            axis,
            reason: "axis index exceeds tensor rank",
        })
    }

    fn as_array(&self) -> [usize; 4] {
        [self.upper, self.upper_dotted, self.lower, self.lower_dotted]
    }

    fn remove_axes(&self, a: usize, b: usize) -> Result<Valency> {
        let mut counts = self.as_array();
        for &axis in &[a, b] {
            let idx = match self.class_of(axis)? {
                AxisClass::Upper => 0,
                AxisClass::UpperDotted => 1,
                AxisClass::Lower => 2,
                AxisClass::LowerDotted => 3,
            };
            counts[idx] -= 1;
        }
        Ok(Valency::new(counts[0], counts[1], counts[2], counts[3]))
    }
}

/// Dense spintensor of arbitrary valency over an N-dimensional spinor space.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinTensor<T> {
    n: usize,
    valency: Valency,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> SpinTensor<T> {
    /// Zero tensor of the given valency.
    pub fn zeros(n: usize, valency: Valency) -> Result<Self> {
        if n < 2 {
            return Err(Error::Dimension {
                what: "spintensor dimension",
                expected: 2,
                found: n,
            });
        }
        let len = n.checked_pow(valency.rank() as u32).ok_or(Error::Axis {
            axis: valency.rank(),
            reason: "tensor rank overflows storage size",
        })?;
        Ok(Self {
            n,
            valency,
            data: vec![Complex::new(T::zero(), T::zero()); len],
        })
    }

    /// Rank-zero tensor holding a single scalar value.
    pub fn scalar(n: usize, value: Complex<T>) -> Result<Self> {
        let mut t = Self::zeros(n, Valency::new(0, 0, 0, 0))?;
        t.data[0] = value;
        Ok(t)
    }

    /// Builds a tensor from a flat component list in row-major axis order.
    pub fn from_components(n: usize, valency: Valency, data: Vec<Complex<T>>) -> Result<Self> {
        let mut t = Self::zeros(n, valency)?;
        if data.len() != t.data.len() {
            return Err(Error::Dimension {
                what: "component count",
                expected: t.data.len(),
                found: data.len(),
            });
        }
        for (i, z) in data.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite { row: i, col: 0 });
            }
        }
        t.data = data;
        Ok(t)
    }

    /// Valency-(1,0,0,0) tensor from a spinor's components.
    pub fn from_spinor(s: &Spinor<T>) -> Result<Self> {
        Self::from_components(s.n(), Valency::new(1, 0, 0, 0), s.components().to_vec())
    }

    /// Valency-(1,1,0,0) tensor from a matrix: entry (b, c) feeds the
    /// component with upper index b and dotted upper index c.
    pub fn from_matrix_upper(m: &ComplexMatrix<T>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows();
        let data = (0..n * n).map(|k| m[(k / n, k % n)]).collect();
        Self::from_components(n, Valency::new(1, 1, 0, 0), data)
    }

    /// Valency-(0,0,1,1) tensor from a matrix: entry (c, b) feeds the
    /// component with lower index b and dotted lower index c, matching the
    /// index layout that pairs with [`SpinTensor::from_matrix_upper`] under
    /// full contraction.
    pub fn from_matrix_lower(m: &ComplexMatrix<T>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows();
        let data = (0..n * n).map(|k| m[(k % n, k / n)]).collect();
        Self::from_components(n, Valency::new(0, 0, 1, 1), data)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn valency(&self) -> Valency {
        self.valency
    }

    pub fn rank(&self) -> usize {
        self.valency.rank()
    }

    fn flat_index(&self, idx: &[usize]) -> Result<usize> {
        if idx.len() != self.rank() {
            return Err(Error::Dimension {
                what: "index tuple length",
                expected: self.rank(),
                found: idx.len(),
            });
        }
        let mut flat = 0;
        for (axis, &i) in idx.iter().enumerate() {
            if i >= self.n {
                return Err(Error::Axis {
                    axis,
                    reason: "index value exceeds dimension",
                });
            }
            flat = flat * self.n + i;
        }
        Ok(flat)
    }

    /// Component at a full index tuple (class-grouped axis order).
    pub fn get(&self, idx: &[usize]) -> Result<Complex<T>> {
        Ok(self.data[self.flat_index(idx)?])
    }

    /// Sets the component at a full index tuple.
    pub fn set(&mut self, idx: &[usize], value: Complex<T>) -> Result<()> {
        let flat = self.flat_index(idx)?;
        self.data[flat] = value;
        Ok(())
    }

    /// Value of a rank-zero tensor.
    pub fn as_scalar(&self) -> Result<Complex<T>> {
        if self.rank() != 0 {
            return Err(Error::Axis {
                axis: self.rank(),
                reason: "tensor is not rank zero",
            });
        }
        Ok(self.data[0])
    }

    /// Flat component storage in row-major axis order.
    pub fn components(&self) -> &[Complex<T>] {
        &self.data
    }

    /// Componentwise sum; valencies and dimensions must agree.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n || self.valency != other.valency {
            return Err(Error::ValencyMismatch {
                left: self.valency.as_array(),
                right: other.valency.as_array(),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            n: self.n,
            valency: self.valency,
            data,
        })
    }

    /// Componentwise scaling.
    pub fn scaled(&self, factor: Complex<T>) -> Self {
        Self {
            n: self.n,
            valency: self.valency,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    /// Largest componentwise difference against another tensor.
    pub fn max_diff(&self, other: &Self) -> T {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    /// Largest component modulus.
    pub fn max_norm(&self) -> T {
        self.data.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    /// Per-axis source positions of the product tensor: within each class
    /// block, the left operand's axes come before the right operand's.
    fn product_layout(a: &Valency, b: &Valency) -> (Valency, Vec<(bool, usize)>) {
        let joint = Valency::new(
            a.upper + b.upper,
            a.upper_dotted + b.upper_dotted,
            a.lower + b.lower,
            a.lower_dotted + b.lower_dotted,
        );
        let mut sources = Vec::with_capacity(joint.rank());
        let a_counts = a.as_array();
        let b_counts = b.as_array();
        let mut a_start = 0;
        let mut b_start = 0;
        for class in 0..4 {
            for k in 0..a_counts[class] {
                sources.push((false, a_start + k));
            }
            for k in 0..b_counts[class] {
                sources.push((true, b_start + k));
            }
            a_start += a_counts[class];
            b_start += b_counts[class];
        }
        (joint, sources)
    }

    /// Outer product; class blocks interleave with this tensor's axes first.
    pub fn tensor_product(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Dimension {
                what: "spintensor dimension",
                expected: self.n,
                found: other.n,
            });
        }
        let (valency, sources) = Self::product_layout(&self.valency, &other.valency);
        let mut out = Self::zeros(self.n, valency)?;
        let rank = out.rank();
        let mut idx = vec![0usize; rank];
        let mut a_idx = vec![0usize; self.rank()];
        let mut b_idx = vec![0usize; other.rank()];
        loop {
            for (pos, &(from_b, src)) in sources.iter().enumerate() {
                if from_b {
                    b_idx[src] = idx[pos];
                } else {
                    a_idx[src] = idx[pos];
                }
            }
            let value = self.get(&a_idx)? * other.get(&b_idx)?;
            out.set(&idx, value)?;
            if !increment(&mut idx, self.n) {
                break;
            }
        }
        Ok(out)
    }

    /// Contracts an upper-type axis with a lower-type axis; dotted axes pair
    /// only with dotted axes. Positions are global axis positions.
    pub fn contract(&self, upper_axis: usize, lower_axis: usize) -> Result<Self> {
        let up_class = self.valency.class_of(upper_axis)?;
        let low_class = self.valency.class_of(lower_axis)?;
        let compatible = matches!(
            (up_class, low_class),
            (AxisClass::Upper, AxisClass::Lower) | (AxisClass::UpperDotted, AxisClass::LowerDotted)
        );
        if !compatible {
            return Err(Error::Axis {
                axis: upper_axis,
                reason:
                    "contraction needs an upper axis paired with a lower axis of matching dotting",
            });
        }
        if upper_axis == lower_axis {
            return Err(Error::Axis {
                axis: upper_axis,
                reason: "cannot contract an axis with itself",
            });
        }
        let valency = self.valency.remove_axes(upper_axis, lower_axis)?;
        let mut out = Self::zeros(self.n, valency)?;
        let out_rank = out.rank();
        let mut out_idx = vec![0usize; out_rank];
        let mut src_idx = vec![0usize; self.rank()];
        loop {
            let mut acc = Complex::new(T::zero(), T::zero());
            for rep in 0..self.n {
                let mut k = 0;
                for (axis, slot) in src_idx.iter_mut().enumerate() {
                    if axis == upper_axis || axis == lower_axis {
                        *slot = rep;
                    } else {
                        *slot = out_idx[k];
                        k += 1;
                    }
                }
                acc += self.get(&src_idx)?;
            }
            out.set(&out_idx, acc)?;
            if !increment(&mut out_idx, self.n) {
                break;
            }
        }
        Ok(out)
    }

    /// Rewrites the components in the basis produced by the change.
    ///
    /// Upper axes contract with the component matrix `d`, lower axes with
    /// the transpose of the basis matrix `c`; dotted axes use the complex
    /// conjugates of those matrices.
    pub fn transform(&self, change: &BasisChange<T>) -> Result<Self> {
        if change.n() != self.n {
            return Err(Error::Dimension {
                what: "basis change dimension",
                expected: self.n,
                found: change.n(),
            });
        }
        let d = change.d().clone();
        let d_conj = d.conjugate();
        let c_t = change.c().transpose();
        let c_adj = change.c().hermitian_adjoint();
        let mut current = self.clone();
        for axis in 0..self.rank() {
            let m = match self.valency.class_of(axis)? {
                AxisClass::Upper => &d,
                AxisClass::UpperDotted => &d_conj,
                AxisClass::Lower => &c_t,
                AxisClass::LowerDotted => &c_adj,
            };
            current = current.apply_to_axis(m, axis)?;
        }
        Ok(current)
    }

    /// Contracts matrix rows against one axis: out[..., i, ...] =
    /// sum_j m[i][j] self[..., j, ...].
    fn apply_to_axis(&self, m: &ComplexMatrix<T>, axis: usize) -> Result<Self> {
        let mut out = Self::zeros(self.n, self.valency)?;
        let mut idx = vec![0usize; self.rank()];
        let mut src = idx.clone();
        loop {
            let mut acc = Complex::new(T::zero(), T::zero());
            src.copy_from_slice(&idx);
            for j in 0..self.n {
                src[axis] = j;
                acc += m[(idx[axis], j)] * self.get(&src)?;
            }
            out.set(&idx, acc)?;
            if !increment(&mut idx, self.n) {
                break;
            }
        }
        Ok(out)
    }
}

/// Odometer step over index tuples with all axes of size `n`.
fn increment(idx: &mut [usize], n: usize) -> bool {
    for slot in idx.iter_mut().rev() {
        *slot += 1;
        if *slot < n {
            return true;
        }
        *slot = 0;
    }
    false
}
