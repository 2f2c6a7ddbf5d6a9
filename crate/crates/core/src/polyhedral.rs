//! Exact feasibility of `A·λ = b, λ ≥ 0` over the rationals by Gaussian
//! elimination followed by Fourier–Motzkin elimination of the free variables.
//! Only meant for the handful of variables that cone validation produces.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::intlat::rref;

/// `coeffs · t <= bound`
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Inequality {
    coeffs: Vec<BigRational>,
    bound: BigRational,
}

impl Inequality {
    /// Scale so the first nonzero coefficient has absolute value one.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in &mut self.coeffs {
                *c = c.clone() / lead.clone();
            }
            self.bound /= lead;
        }
        self
    }
}

/// Whether some `λ ≥ 0` satisfies `rows · λ = rhs`.
pub(crate) fn nonnegative_solution_exists(rows: &[Vec<BigInt>], rhs: &[BigInt]) -> bool {
    let nvars = rows.first().map_or(0, Vec::len);
    let augmented: Vec<Vec<BigRational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            r.iter()
                .chain(std::iter::once(b))
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let (reduced, pivots) = rref(augmented, nvars);
    if reduced
        .iter()
        .any(|r| r[..nvars].iter().all(Zero::is_zero) && !r[nvars].is_zero())
    {
        return false;
    }
    let free: Vec<usize> = (0..nvars).filter(|c| !pivots.contains(c)).collect();

    // pivot variable p = rhs_p - Σ c_pf t_f >= 0  ⇔  Σ c_pf t_f <= rhs_p
    let mut system: Vec<Inequality> = pivots
        .iter()
        .enumerate()
        .map(|(row, _)| Inequality {
            coeffs: free.iter().map(|&f| reduced[row][f].clone()).collect(),
            bound: reduced[row][nvars].clone(),
        })
        .collect();
    // free variables are themselves nonnegative: -t_f <= 0
    for k in 0..free.len() {
        let mut coeffs = vec![BigRational::zero(); free.len()];
        coeffs[k] = BigRational::from_integer(BigInt::from(-1));
        system.push(Inequality {
            coeffs,
            bound: BigRational::zero(),
        });
    }

    for var in 0..free.len() {
        let (mut upper, mut lower, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for ineq in system {
            if ineq.coeffs[var].is_positive() {
                upper.push(ineq);
            } else if ineq.coeffs[var].is_negative() {
                lower.push(ineq);
            } else {
                rest.push(ineq);
            }
        }
        for u in &upper {
            for l in &lower {
                let su = u.coeffs[var].abs();
                let sl = l.coeffs[var].abs();
                let coeffs = u
                    .coeffs
                    .iter()
                    .zip(&l.coeffs)
                    .map(|(a, b)| a.clone() / su.clone() + b.clone() / sl.clone())
                    .collect();
                let bound = u.bound.clone() / su.clone() + l.bound.clone() / sl.clone();
                rest.push(Inequality { coeffs, bound }.normalized());
            }
        }
        rest.sort();
        rest.dedup();
        system = rest;
    }
    system.iter().all(|ineq| !ineq.bound.is_negative())
}
