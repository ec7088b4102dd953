//! Variable spaces.
//!
//! A [`VarSpace`] fixes the variables of a polynomial ring and their
//! precedence. Exponent vectors are laid out in precedence order:
//!
//! ```text
//! t_1 .. t_e | x_1 .. x_n | y_1 .. y_n | z_1 .. z_k
//! ```
//!
//! so index 0 is the largest variable and the last index the smallest.
//! The usual ring has `k = n` z-variables; the generic residual setup uses
//! `k = r*n` and the two-row ring of the chain link uses `k = 0`.

use std::fmt;

use crate::error::{AlgebraError, Result};

/// A single ring variable, 1-based within its block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T(usize),
    X(usize),
    Y(usize),
    Z(usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::T(i) => write!(f, "t{i}"),
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
            Var::Z(i) => write!(f, "z{i}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarSpace {
    n: usize,
    z_count: usize,
    elim_count: usize,
}

impl VarSpace {
    /// `Q[x_1..x_n, y_1..y_n, z_1..z_n]`.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_blocks(n, n, 0)
    }

    /// `Q[x_1..x_n, y_1..y_n]`, the ring of the generic 2 x n matrix alone.
    pub fn two_row(n: usize) -> Result<Self> {
        Self::with_blocks(n, 0, 0)
    }

    pub fn with_blocks(n: usize, z_count: usize, elim_count: usize) -> Result<Self> {
        if n < 2 {
            return Err(AlgebraError::Precondition(format!(
                "matrix width must be at least 2, got {n}"
            )));
        }
        Ok(VarSpace { n, z_count, elim_count })
    }

    /// The same space with `extra` additional elimination variables in front.
    pub fn with_extra_elim(&self, extra: usize) -> Self {
        VarSpace { elim_count: self.elim_count + extra, ..*self }
    }

    /// The same space with every elimination variable removed.
    pub fn without_elim(&self) -> Self {
        VarSpace { elim_count: 0, ..*self }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn z_count(&self) -> usize {
        self.z_count
    }

    pub fn elim_count(&self) -> usize {
        self.elim_count
    }

    pub fn nvars(&self) -> usize {
        self.elim_count + 2 * self.n + self.z_count
    }

    pub fn index(&self, var: Var) -> Result<usize> {
        let (i, limit, offset) = match var {
            Var::T(i) => (i, self.elim_count, 0),
            Var::X(i) => (i, self.n, self.elim_count),
            Var::Y(i) => (i, self.n, self.elim_count + self.n),
            Var::Z(i) => (i, self.z_count, self.elim_count + 2 * self.n),
        };
        if i == 0 || i > limit {
            return Err(AlgebraError::UnknownVariable(var.to_string()));
        }
        Ok(offset + i - 1)
    }

    pub fn var(&self, index: usize) -> Var {
        let e = self.elim_count;
        let n = self.n;
        assert!(index < self.nvars(), "variable index {index} out of range");
        if index < e {
            Var::T(index + 1)
        } else if index < e + n {
            Var::X(index - e + 1)
        } else if index < e + 2 * n {
            Var::Y(index - e - n + 1)
        } else {
            Var::Z(index - e - 2 * n + 1)
        }
    }

    pub fn x(&self, i: usize) -> usize {
        self.index(Var::X(i)).expect("x index out of range")
    }

    pub fn y(&self, i: usize) -> usize {
        self.index(Var::Y(i)).expect("y index out of range")
    }

    pub fn z(&self, i: usize) -> usize {
        self.index(Var::Z(i)).expect("z index out of range")
    }

    pub fn t(&self, i: usize) -> usize {
        self.index(Var::T(i)).expect("t index out of range")
    }

    pub(crate) fn check_same(&self, other: &VarSpace) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(AlgebraError::SpaceMismatch { left: self.to_string(), right: other.to_string() })
        }
    }
}

impl fmt::Display for VarSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[")?;
        if self.elim_count > 0 {
            write!(f, "t1..t{}; ", self.elim_count)?;
        }
        write!(f, "x1..x{n}, y1..y{n}", n = self.n)?;
        if self.z_count > 0 {
            write!(f, ", z1..z{}", self.z_count)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_follows_precedence() {
        let s = VarSpace::with_blocks(4, 4, 1).unwrap();
        assert_eq!(s.nvars(), 13);
        assert_eq!(s.index(Var::T(1)).unwrap(), 0);
        assert_eq!(s.x(1), 1);
        assert_eq!(s.x(4), 4);
        assert_eq!(s.y(1), 5);
        assert_eq!(s.z(4), 12);
        for i in 0..s.nvars() {
            assert_eq!(s.index(s.var(i)).unwrap(), i);
        }
    }

    #[test]
    fn rejects_narrow_matrix_and_bad_vars() {
        assert!(VarSpace::new(1).is_err());
        let s = VarSpace::two_row(3).unwrap();
        assert!(s.index(Var::Z(1)).is_err());
        assert!(s.index(Var::X(0)).is_err());
        assert!(s.index(Var::Y(4)).is_err());
    }
}
