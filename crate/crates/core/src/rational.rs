//! Exact rational scalars.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps values in lowest
//! terms with a positive denominator. This module adds the string form used
//! in reports and modular reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `"p"` for integers, `"p/q"` otherwise (q > 1, lowest terms).
pub fn format(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"`.
pub fn parse(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidArgument(format!("not a rational number: `{s}`"));
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(Rational::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Residue of `r` modulo `modulus` in `0..modulus`, computed as `a * b^-1`.
pub fn residue(r: &Rational, modulus: u64) -> Result<u64> {
    if modulus == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    let m = BigInt::from(modulus);
    let den = r.denom().mod_floor(&m);
    let inv = mod_inverse(&den, &m).ok_or_else(|| Error::NonInvertible {
        denominator: r.denom().clone(),
        modulus,
    })?;
    let num = r.numer().mod_floor(&m);
    Ok(((num * inv).mod_floor(&m)).to_u64().expect("residue fits in u64"))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let egcd = a.extended_gcd(m);
    if !egcd.gcd.abs().is_one() {
        return None;
    }
    Some(egcd.x.mod_floor(m))
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn is_nonnegative_integer(r: &Rational) -> bool {
    is_integer(r) && !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_integers_without_denominator() {
        assert_eq!(format(&int(-7)), "-7");
        assert_eq!(format(&ratio(10, 4)), "5/2");
        assert_eq!(format(&ratio(-1, 6)), "-1/6");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["0", "-3", "7/12", "-1/6"] {
            assert_eq!(format(&parse(s).unwrap()), s);
        }
        assert_eq!(parse("4/2").unwrap(), int(2));
        assert!(parse("1/0").is_err());
        assert!(parse("abc").is_err());
    }

    #[test]
    fn residues() {
        assert_eq!(residue(&int(14), 7).unwrap(), 0);
        assert_eq!(residue(&int(-1), 7).unwrap(), 6);
        // 1/6 mod 7: 6 * 6 = 36 = 1 mod 7
        assert_eq!(residue(&ratio(1, 6), 7).unwrap(), 6);
        assert_eq!(residue(&ratio(5, 72), 11).unwrap() * 72 % 11, 5);
        assert!(matches!(
            residue(&ratio(1, 14), 7),
            Err(Error::NonInvertible { modulus: 7, .. })
        ));
    }
}
