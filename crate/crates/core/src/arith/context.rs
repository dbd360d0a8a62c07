//! Parameter rings: which indeterminates a tower uses and whether they are
//! kept symbolic or replaced by rational values.

use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{render_rational, MAX_VARS};
use super::ratfunc::RationalFunction;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    Specialized(Vec<BigRational>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingContext {
    vars: Vec<String>,
    mode: Mode,
}

fn check_vars(vars: &[&str]) -> Result<Vec<String>> {
    if vars.len() > MAX_VARS {
        return Err(Error::InvalidContext(format!("at most {MAX_VARS} variables are supported")));
    }
    let mut out: Vec<String> = Vec::with_capacity(vars.len());
    for v in vars {
        if v.is_empty() {
            return Err(Error::InvalidContext("empty variable name".into()));
        }
        if out.iter().any(|o| o == v) {
            return Err(Error::InvalidContext(format!("duplicate variable {v}")));
        }
        out.push(v.to_string());
    }
    Ok(out)
}

impl RingContext {
    /// A symbolic context. The variable list may be empty (the symmetric group
    /// needs no parameter).
    pub fn symbolic(vars: &[&str]) -> Result<Self> {
        Ok(Self { vars: check_vars(vars)?, mode: Mode::Symbolic })
    }

    pub fn specialized(vars: &[&str], values: Vec<BigRational>) -> Result<Self> {
        let vars = check_vars(vars)?;
        if values.len() != vars.len() {
            return Err(Error::InvalidContext(format!(
                "expected {} values, got {}",
                vars.len(),
                values.len()
            )));
        }
        if let Some(i) = values.iter().position(|v| v.is_zero()) {
            return Err(Error::InvalidContext(format!("parameter {} must be nonzero", vars[i])));
        }
        Ok(Self { vars, mode: Mode::Specialized(values) })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn mode(&self) -> &Mode {
        &self.mode
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self.mode, Mode::Symbolic)
    }

    pub fn values(&self) -> Option<&[BigRational]> {
        match &self.mode {
            Mode::Symbolic => None,
            Mode::Specialized(v) => Some(v),
        }
    }

    /// Text such as `delta=7/3, q=2` describing the specialization.
    pub fn assignment(&self) -> String {
        match &self.mode {
            Mode::Symbolic => "symbolic".to_string(),
            Mode::Specialized(vals) => self
                .vars
                .iter()
                .zip(vals)
                .map(|(n, v)| format!("{n}={}", render_rational(v)))
                .collect::<Vec<_>>()
                .join(", "),
        }
    }

    pub fn specialize(&self, x: &RationalFunction) -> Result<BigRational> {
        let vals = self
            .values()
            .ok_or_else(|| Error::InvalidContext("context is symbolic".into()))?;
        x.eval(vals).map_err(|_| {
            Error::GenericityViolation(format!(
                "denominator of {} vanishes at {}",
                x.render(&self.vars),
                self.assignment()
            ))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn specialization_examples() {
        let ctx = RingContext::specialized(&["q"], vec![r(2, 1)]).unwrap();
        let q = RationalFunction::var(0);
        let z = q.sub(&q.inv().unwrap());
        assert_eq!(ctx.specialize(&z).unwrap(), r(3, 2));

        let ctx = RingContext::specialized(&["delta"], vec![r(1, 1)]).unwrap();
        let f = RationalFunction::var(0).sub(&RationalFunction::one()).inv().unwrap();
        assert!(matches!(ctx.specialize(&f), Err(Error::GenericityViolation(_))));

        let ctx = RingContext::specialized(&["delta"], vec![r(7, 3)]).unwrap();
        let d2 = RationalFunction::var(0).mul(&RationalFunction::var(0));
        assert_eq!(ctx.specialize(&d2).unwrap(), r(49, 9));
    }

    #[test]
    fn rejects_bad_contexts() {
        assert!(RingContext::symbolic(&["q", "q"]).is_err());
        assert!(RingContext::specialized(&["q"], vec![r(0, 1)]).is_err());
        assert!(RingContext::specialized(&["q", "rho"], vec![r(1, 1)]).is_err());
    }
}
