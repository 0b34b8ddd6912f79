use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

pub type Q = BigRational;

/// Always "p/q", with q > 0 and the fraction reduced.
pub fn format_rational(q: &Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Accepts "p/q" or an integer "p".
pub fn parse_rational(s: &str) -> Result<Q> {
    let bad = || Error::PreconditionViolation(format!("not a rational: {s:?}"));
    let int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| bad());
    match s.split_once('/') {
        Some((p, q)) => {
            let q = int(q)?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Q::new(int(p)?, q))
        }
        None => Ok(Q::from_integer(int(s)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_and_parses() {
        let q = Q::new((-6).into(), 4.into());
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(parse_rational("-3/2").unwrap(), q);
        assert_eq!(parse_rational("5").unwrap(), Q::from_integer(5.into()));
        assert_eq!(format_rational(&Q::from_integer(5.into())), "5/1");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
