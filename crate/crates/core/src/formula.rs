//! Closed-form counts for small numbers of states, in arbitrary precision.
//!
//! `A_k(n)` counts trim acyclic automata and `M_k(n)` minimal ones. The
//! four-state ADFA formula is evaluated term by term as stated; it does not
//! agree with exhaustive generation (see [`compare_with_generator`]): it falls
//! short by `4(4^k - 2*3^k + 2^k)(2^k - 1)` for every `k` tested.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};

use crate::canonical::Mode;
use crate::error::{Error, Result};
use crate::generate::Generator;

fn pow(base: u32, k: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), k)
}

fn to_unsigned(v: BigInt) -> BigUint {
    assert!(!v.is_negative(), "count formula evaluated to {v}");
    v.to_biguint().expect("non-negative")
}

/// `M_k(n)` for `n` in {2, 3}.
pub fn madfa_formula(n: usize, k: usize) -> Result<BigUint> {
    let one = BigInt::one();
    let v = match n {
        2 => 2 * (pow(2, k) - &one),
        3 => 4 * (pow(3, k) - pow(2, k)) * (pow(2, k) - &one),
        _ => return Err(Error::UnsupportedN { n }),
    };
    Ok(to_unsigned(v))
}

/// `A_k(n)` for `n` in {2, 3, 4}.
pub fn adfa_formula(n: usize, k: usize) -> Result<BigUint> {
    let one = BigInt::one();
    let (p2, p3, p4) = (pow(2, k), pow(3, k), pow(4, k));
    let v = match n {
        2 | 3 => {
            let m = BigInt::from(madfa_formula(n, k)?);
            if n == 2 {
                m
            } else {
                m + (&p3 - 2 * &p2 + &one)
            }
        }
        4 => {
            let t1 = 8 * (&p4 - &p3) * (&p3 - &p2) * (&p2 - &one);
            let t2 = 4 * (&p4 - 2 * &p3 + &p2) * (&p2 - &one) * (&p2 - &one);
            let t3 = 2 * (&p4 - &p3) * (&p3 - 2 * &p2 + &one);
            let last = &p4 - 3 * &p3 + 3 * &p2 - &one;
            assert!(
                (&last % 3u32) == BigInt::from(0),
                "final term {last} is not divisible by 3"
            );
            t1 + t2 + t3 + last / 3
        }
        _ => return Err(Error::UnsupportedN { n }),
    };
    Ok(to_unsigned(v))
}

pub fn formula(n: usize, k: usize, mode: Mode) -> Result<BigUint> {
    match mode {
        Mode::Adfa => adfa_formula(n, k),
        Mode::Madfa => madfa_formula(n, k),
    }
}

/// Where a count came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Formula,
    Generator,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub n: usize,
    pub k: usize,
    pub mode: Mode,
    pub value: BigUint,
    pub source: Source,
}

/// Formula value next to the generated count. The generator is authoritative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaComparison {
    pub formula: CountReport,
    pub generated: CountReport,
}

impl FormulaComparison {
    pub fn agrees(&self) -> bool {
        self.formula.value == self.generated.value
    }

    /// `generated - formula`.
    pub fn difference(&self) -> BigInt {
        BigInt::from(self.generated.value.clone()) - BigInt::from(self.formula.value.clone())
    }
}

impl std::fmt::Display for FormulaComparison {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "n={} k={} {}: formula {} generator {} ({})",
            self.formula.n,
            self.formula.k,
            self.formula.mode,
            self.formula.value,
            self.generated.value,
            if self.agrees() {
                "agree".to_string()
            } else {
                format!("differ by {}", self.difference())
            }
        )
    }
}

pub fn compare_with_generator(n: usize, k: usize, mode: Mode) -> Result<FormulaComparison> {
    let value = formula(n, k, mode)?;
    let generated = Generator::new(n, k, mode)?.count();
    Ok(FormulaComparison {
        formula: CountReport {
            n,
            k,
            mode,
            value,
            source: Source::Formula,
        },
        generated: CountReport {
            n,
            k,
            mode,
            value: BigUint::from(generated),
            source: Source::Generator,
        },
    })
}
