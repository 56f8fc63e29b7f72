//! Text form of monomial ideals.
//!
//! ```text
//! ideal    := monomial (',' monomial)*
//! monomial := factor ('*' factor)*
//! factor   := 'x' INDEX ('^' UINT)?
//! ```
//!
//! Indices are 1-based, whitespace is ignored, a missing exponent means 1
//! and repeated variables multiply.

use crate::error::{Error, Result};
use crate::ideal::{Exponent, ExponentVector, MonomialIdeal};

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            Some(got) => {
                Err(self.error(format!("expected `{}`, found `{}`", c as char, got as char)))
            }
            None => Err(self.error(format!("expected `{}`, found end of input", c as char))),
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number".into()));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse::<u64>()
            .map_err(|_| Error::Parse {
                position: start,
                message: "number out of range".into(),
            })
    }

    fn error(&self, message: String) -> Error {
        Error::Parse {
            position: self.pos,
            message,
        }
    }
}

/// Parses an ideal; `nvars` overrides the inferred variable count and must
/// be at least the largest index used.
pub fn parse_ideal(text: &str, nvars: Option<usize>) -> Result<MonomialIdeal> {
    let mut lx = Lexer {
        bytes: text.as_bytes(),
        pos: 0,
    };
    if lx.peek().is_none() {
        return Err(lx.error("empty input".into()));
    }
    let mut monomials: Vec<Vec<(usize, u64)>> = Vec::new();
    loop {
        let mut factors = Vec::new();
        loop {
            lx.expect(b'x')?;
            let at = lx.pos;
            let index = lx.number()?;
            if index == 0 {
                return Err(Error::Parse {
                    position: at,
                    message: "variable indices start at 1".into(),
                });
            }
            let exp = if lx.peek() == Some(b'^') {
                lx.pos += 1;
                lx.number()?
            } else {
                1
            };
            factors.push((index as usize, exp));
            if lx.peek() == Some(b'*') {
                lx.pos += 1;
            } else {
                break;
            }
        }
        monomials.push(factors);
        match lx.peek() {
            Some(b',') => lx.pos += 1,
            None => break,
            Some(c) => return Err(lx.error(format!("unexpected `{}`", c as char))),
        }
    }

    let inferred = monomials
        .iter()
        .flat_map(|m| m.iter().map(|&(i, _)| i))
        .max()
        .unwrap_or(1);
    let n = match nvars {
        Some(n) if n < inferred => {
            return Err(Error::InvalidArgument(format!(
                "variable count {n} is smaller than the largest index x{inferred}"
            )))
        }
        Some(n) => n,
        None => inferred,
    };
    let gens = monomials
        .into_iter()
        .map(|factors| {
            let mut v = vec![0 as Exponent; n];
            for (i, e) in factors {
                let total = u64::from(v[i - 1]) + e;
                v[i - 1] = Exponent::try_from(total)
                    .map_err(|_| Error::ExponentOverflow("parsed monomial"))?;
            }
            Ok(ExponentVector::new(v))
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(n, gens)
}

pub fn format_monomial(v: &ExponentVector) -> String {
    let factors: Vec<String> = v
        .as_slice()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{}", i + 1, e)
            }
        })
        .collect();
    if factors.is_empty() {
        "x1^0".to_string()
    } else {
        factors.join("*")
    }
}

/// Canonical text form; reparses to the same ideal when combined with the
/// ideal's variable count.
pub fn format_ideal(ideal: &MonomialIdeal) -> String {
    ideal
        .generators()
        .iter()
        .map(format_monomial)
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let i = parse_ideal("x1^2, x1*x2, x2^2", None).unwrap();
        assert_eq!(i, MonomialIdeal::maximal(2).power(2).unwrap());
        let t = parse_ideal("x1*x2, x1*x3, x2*x3", None).unwrap();
        assert_eq!(t.nvars(), 3);
        assert_eq!(t.generators().len(), 3);
        let y = parse_ideal("x2", Some(4)).unwrap();
        assert_eq!(y.nvars(), 4);
        assert_eq!(y.generators()[0].as_slice(), &[0, 1, 0, 0]);
    }

    #[test]
    fn whitespace_repeats_and_zero_exponents() {
        let i = parse_ideal("  x 1 ^ 2 * x1 ,x2^0*x2", None).unwrap();
        assert_eq!(
            i.generators()
                .iter()
                .map(|g| g.as_slice().to_vec())
                .collect::<Vec<_>>(),
            vec![vec![0, 1], vec![3, 0]]
        );
        assert!(parse_ideal("x1^0", None).unwrap().is_unit());
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(
            parse_ideal("", None),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(matches!(parse_ideal("   ", None), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_ideal("x1, y2", None),
            Err(Error::Parse { position: 4, .. })
        ));
        assert!(matches!(
            parse_ideal("x1^", None),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse_ideal("x0", None),
            Err(Error::Parse { position: 1, .. })
        ));
        assert!(matches!(
            parse_ideal("x1 x2", None),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse_ideal("x3", Some(2)),
            Err(Error::InvalidArgument(_))
        ));
        assert!(parse_ideal("x1^99999999999", None).is_err());
    }

    #[test]
    fn formatting() {
        let i = parse_ideal("x2^2*x1, x3", None).unwrap();
        assert_eq!(format_ideal(&i), "x3, x1*x2^2");
        assert_eq!(format_ideal(&MonomialIdeal::unit(2)), "x1^0");
    }
}
