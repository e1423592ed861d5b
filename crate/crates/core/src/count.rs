//! Exact counts: Bell numbers and integer partition numbers.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};

/// A nonnegative integer of unbounded size, rendered as canonical decimal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        u64::try_from(&self.0).ok()
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl PartialEq<u64> for BigCount {
    fn eq(&self, other: &u64) -> bool {
        self.to_u64() == Some(*other)
    }
}

impl FromStr for BigCount {
    type Err = String;

    /// Accepts canonical decimal only: digits, no sign, no leading zeros.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let canonical = !s.is_empty()
            && s.bytes().all(|b| b.is_ascii_digit())
            && (s == "0" || !s.starts_with('0'));
        if !canonical {
            return Err(format!("`{s}` is not a canonical decimal count"));
        }
        s.parse::<BigUint>()
            .map(BigCount)
            .map_err(|e| e.to_string())
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Number of set partitions of an `n`-element set, via the Bell triangle.
pub fn bell_number(n: usize) -> BigCount {
    // Each row starts with the last entry of the previous row; the first
    // entry of row n is B(n).
    let mut row = vec![BigUint::from(1u32)];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().expect("rows are nonempty").clone());
        for v in &row {
            let sum = next.last().expect("just pushed") + v;
            next.push(sum);
        }
        row = next;
    }
    BigCount(row.swap_remove(0))
}

/// Number of integer partitions of `n`, via Euler's pentagonal recurrence.
pub fn integer_partition_count(n: usize) -> BigCount {
    let mut table: Vec<BigInt> = Vec::with_capacity(n + 1);
    table.push(BigInt::from(1));
    for i in 1..=n {
        let mut sum = BigInt::from(0);
        for k in 1usize.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = table[i - g1].clone();
            if g2 <= i {
                term += &table[i - g2];
            }
            if k % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        table.push(sum);
    }
    let (sign, digits) = table.swap_remove(n).into_parts();
    debug_assert_ne!(sign, Sign::Minus);
    BigCount(digits)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Counts set partitions by walking restricted growth strings.
    fn bell_by_enumeration(n: usize) -> u64 {
        fn go(i: usize, n: usize, max: usize) -> u64 {
            if i == n {
                return 1;
            }
            (0..=max + 1).map(|v| go(i + 1, n, max.max(v))).sum()
        }
        if n == 0 {
            1
        } else {
            go(1, n, 0)
        }
    }

    /// Counts nonincreasing sequences summing to `n`.
    fn partitions_by_enumeration(n: usize) -> u64 {
        fn go(rest: usize, largest: usize) -> u64 {
            if rest == 0 {
                return 1;
            }
            (1..=largest.min(rest)).map(|p| go(rest - p, p)).sum()
        }
        go(n, n)
    }

    #[test]
    fn bell_small_values() {
        assert_eq!(bell_number(0), 1);
        assert_eq!(bell_number(3), 5);
        for n in 0..=10 {
            assert_eq!(bell_number(n), bell_by_enumeration(n), "B({n})");
        }
    }

    #[test]
    fn bell_fourteen() {
        assert_eq!(bell_number(14).to_string(), "190899322");
    }

    #[test]
    fn partition_small_values() {
        assert_eq!(integer_partition_count(0), 1);
        assert_eq!(integer_partition_count(1), 1);
        assert_eq!(integer_partition_count(4), 5);
        for n in 0..=30 {
            assert_eq!(
                integer_partition_count(n),
                partitions_by_enumeration(n),
                "p({n})"
            );
        }
    }

    #[test]
    fn partition_fourteen_and_hundred() {
        assert_eq!(integer_partition_count(14).to_string(), "135");
        assert_eq!(integer_partition_count(100).to_string(), "190569292");
    }

    #[test]
    fn big_values_exceed_u64() {
        assert!(bell_number(500).to_u64().is_none());
        assert!(integer_partition_count(10_000).to_string().len() > 100);
    }

    #[test]
    fn parse_is_canonical() {
        assert_eq!("135".parse::<BigCount>().unwrap(), 135);
        assert_eq!("0".parse::<BigCount>().unwrap(), 0);
        assert!("0135".parse::<BigCount>().is_err());
        assert!("-1".parse::<BigCount>().is_err());
        assert!("".parse::<BigCount>().is_err());
    }
}
