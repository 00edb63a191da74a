//! The exact coefficient table behind the potential function, and the
//! density threshold f(k).

use crate::error::Error;
use crate::graph::VertexState;

/// Exact rational numbers used for density values and thresholds.
///
/// All quantities in this library stay minuscule next to the i128 range:
/// the bisection in [`crate::mad`] roughly doubles midpoint denominators per
/// step and still tops out near 2^60 for thousand-vertex graphs.
pub type Rational = num_rational::Ratio<i128>;

/// All coefficients for a fixed k, as exact integers.
///
/// `c_u` holds C_U,j for j = 0..k-1 and `c_f` holds C_F,j for j = 1..k;
/// use the accessors to index by j directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    k: usize,
    c_e: i64,
    c_u: Vec<i64>,
    c_f: Vec<i64>,
    c_i: i64,
}

impl CoefficientTable {
    pub fn new(k: usize) -> Result<Self, Error> {
        if k < 2 {
            return Err(Error::InvalidK(k));
        }
        let ki = k as i64;
        let c_e = if k % 2 == 0 { 3 * ki - 1 } else { 3 * ki - 2 };
        let c_u0 = (3 * c_e - 3) / 2;
        let c_u: Vec<i64> = (0..ki).map(|j| c_u0 - 3 * j).collect();
        let low_top = (k + 1) / 2;
        let c_f: Vec<i64> = (1..=ki)
            .map(|j| if j <= low_top as i64 { c_e - 3 * j } else { 3 * (ki - j) })
            .collect();
        let c_i = (c_e - 3) / 2;

        let table = CoefficientTable { k, c_e, c_u, c_f, c_i };
        debug_assert!(table.c_u.iter().chain(&table.c_f).all(|&c| c >= 0));
        debug_assert_eq!(table.c_i, table.c_u(0) + table.c_f(k) - table.c_e);
        Ok(table)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn c_e(&self) -> i64 {
        self.c_e
    }

    /// C_U,j for 0 <= j <= k-1.
    pub fn c_u(&self, j: usize) -> i64 {
        self.c_u[j]
    }

    /// C_F,j for 1 <= j <= k.
    pub fn c_f(&self, j: usize) -> i64 {
        assert!(j >= 1, "F(0) has no coefficient");
        self.c_f[j - 1]
    }

    pub fn c_i(&self) -> i64 {
        self.c_i
    }

    /// All C_U,j in order of j.
    pub fn c_u_all(&self) -> &[i64] {
        &self.c_u
    }

    /// All C_F,j in order of j, starting at j = 1.
    pub fn c_f_all(&self) -> &[i64] {
        &self.c_f
    }

    /// Coefficient of a vertex in the given state.
    pub fn state_coefficient(&self, s: VertexState) -> i64 {
        match s {
            VertexState::U(j) => self.c_u(j),
            VertexState::F(j) => self.c_f(j),
            VertexState::I => self.c_i,
        }
    }

    /// Last j of the C_F,j = C_E - 3j regime; regimes switch at j+1.
    pub fn low_regime_top(&self) -> usize {
        (self.k + 1) / 2
    }
}

/// The sharp density threshold: graphs with mad at most f(k) admit an
/// (I,F_k)-coloring. Equals 3 - 3/(3k-1) for even k and 3 - 3/(3k-2) for
/// odd k, which is 2*C_U,0/C_E.
pub fn f_threshold(k: usize) -> Result<Rational, Error> {
    let t = CoefficientTable::new(k)?;
    Ok(Rational::new(2 * t.c_u(0) as i128, t.c_e() as i128))
}
