use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::poly::{self, Polynomial};

/// Recursive-descent parser for the polynomial grammar: variables match
/// `[a-z][a-zA-Z0-9]*`, nonnegative integer literals, operators `+ - * ^`,
/// parentheses, whitespace ignored. Implicit multiplication is rejected.
pub fn parse_polynomial(
    text: &str,
    field: &PrimeField,
    weights: &[u64],
    vars: &[String],
) -> Result<Polynomial> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        line: 1,
        col: 1,
        field: *field,
        weights,
        vars,
    };
    p.skip_ws();
    let f = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(f)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
    field: PrimeField,
    weights: &'a [u64],
    vars: &'a [String],
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.to_string() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        self.skip_ws();
        if let Some(c) = self.peek() {
            if c == '-' || c == '+' {
                self.bump();
                negate = c == '-';
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = poly::neg(&self.field, &acc);
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    let t = self.term()?;
                    acc = poly::add(&self.field, self.weights, &acc, &t);
                }
                Some('-') => {
                    self.bump();
                    let t = self.term()?;
                    acc = poly::sub(&self.field, self.weights, &acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.bump();
                    let f = self.factor()?;
                    acc = poly::mul(&self.field, self.weights, &acc, &f);
                }
                // implicit multiplication like `2x` or `x(y+1)` is forbidden
                Some(c) if c.is_ascii_alphanumeric() || c == '(' => {
                    return Err(self.err("implicit multiplication is not allowed; use `*`"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let mut base = self.atom()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('^') {
                self.bump();
                self.skip_ws();
                let e = self.uint()?;
                base = poly::pow(&self.field, self.weights, &base, e, self.vars.len());
            } else {
                return Ok(base);
            }
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let f = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.bump();
                Ok(f)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                Ok(Polynomial::constant(&self.field, (n % self.field.p() as u64) as i64, self.vars.len()))
            }
            Some(c) if c.is_ascii_lowercase() => {
                let (line, col) = (self.line, self.col);
                let mut name = String::new();
                name.push(self.bump().unwrap());
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric()) {
                    name.push(self.bump().unwrap());
                }
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => {
                        let mut exp = vec![0u32; self.vars.len()];
                        exp[i] = 1;
                        Ok(Polynomial::monomial(exp, 1))
                    }
                    None => Err(Error::UnknownVariable { name, line, col }),
                }
            }
            _ => Err(self.err("expected a variable, integer, or `(`")),
        }
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let mut s = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            s.push(self.bump().unwrap());
        }
        if s.is_empty() {
            return Err(self.err("expected a nonnegative integer"));
        }
        s.parse::<u64>().map_err(|_| self.err("integer literal too large"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::display;

    fn setup(p: u64, vars: &[&str], weights: &[u64]) -> (PrimeField, Vec<u64>, Vec<String>) {
        (
            PrimeField::new(p).unwrap(),
            weights.to_vec(),
            vars.iter().map(|s| s.to_string()).collect(),
        )
    }

    #[test]
    fn fermat_cubic_over_f2() {
        let (f, w, v) = setup(2, &["x", "y", "z"], &[1, 1, 1]);
        let g = parse_polynomial("x^3+y^3+z^3", &f, &w, &v).unwrap();
        assert_eq!(g.num_terms(), 3);
        assert!(g.is_homogeneous(&w));
        assert_eq!(g.degree(&w), Some(3));
    }

    #[test]
    fn coefficient_reduction_mod_2() {
        let (f, w, v) = setup(2, &["x"], &[1]);
        let g = parse_polynomial("2*x", &f, &w, &v).unwrap();
        assert!(g.is_zero());
    }

    #[test]
    fn weighted_homogeneity() {
        let (f, w, v) = setup(3, &["x", "y"], &[1, 2]);
        let g = parse_polynomial("x^2-y", &f, &w, &v).unwrap();
        assert!(g.is_homogeneous(&w));
        assert_eq!(g.degree(&w), Some(2));
    }

    #[test]
    fn syntax_error_has_position() {
        let (f, w, v) = setup(3, &["x", "y"], &[1, 1]);
        match parse_polynomial("x^2 + @", &f, &w, &v) {
            Err(Error::Parse { line: 1, col, .. }) => assert_eq!(col, 7),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_variable() {
        let (f, w, v) = setup(3, &["x", "y"], &[1, 1]);
        match parse_polynomial("x*q", &f, &w, &v) {
            Err(Error::UnknownVariable { name, .. }) => assert_eq!(name, "q"),
            other => panic!("expected unknown variable, got {other:?}"),
        }
    }

    #[test]
    fn implicit_multiplication_rejected() {
        let (f, w, v) = setup(3, &["x", "y"], &[1, 1]);
        assert!(parse_polynomial("2x", &f, &w, &v).is_err());
    }

    #[test]
    fn display_round_trip() {
        let (f, w, v) = setup(7, &["x", "y"], &[1, 1]);
        let g = parse_polynomial("3*x^2*y - y + 5", &f, &w, &v).unwrap();
        let s = display(&g, &v);
        let h = parse_polynomial(&s, &f, &w, &v).unwrap();
        assert_eq!(g, h);
    }
}
