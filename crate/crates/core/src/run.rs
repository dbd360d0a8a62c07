//! Verification runs: a tower, a rank, a parameter mode and a suite.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::arith::{Rat, RationalFunction, RingContext, Scalar};
use crate::error::{Error, Result};
use crate::report::{timed, Check, Report};
use crate::tower::{Algebra, TowerKind};
use crate::verify;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Dims,
    Axioms,
    Jm,
    Spectrum,
    Gz,
    Branching,
    Bridge,
    All,
}

impl Suite {
    pub const ALL: [Suite; 8] =
        [Suite::Dims, Suite::Axioms, Suite::Jm, Suite::Spectrum, Suite::Gz, Suite::Branching, Suite::Bridge, Suite::All];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dims => "dims",
            Suite::Axioms => "axioms",
            Suite::Jm => "jm",
            Suite::Spectrum => "spectrum",
            Suite::Gz => "gz",
            Suite::Branching => "branching",
            Suite::Bridge => "bridge",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Usage(format!("unknown suite {s}")))
    }
}

/// Largest rank accepted per tower, mode and suite. Symbolic
/// Gelfand-Zeitlin interpolation grows too fast for BMW beyond rank 3 and
/// for Brauer beyond rank 4.
pub fn max_rank(kind: TowerKind, specialized: bool, suite: Suite) -> usize {
    let gz = matches!(suite, Suite::Gz | Suite::All);
    match (kind, specialized) {
        (TowerKind::Bmw, false) if gz => 3,
        (TowerKind::Bmw, _) => 4,
        (TowerKind::Brauer, false) if gz => 4,
        (_, _) => 5,
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub tower: TowerKind,
    pub n: usize,
    /// Parameter values in the order of [`TowerKind::variables`]; `None`
    /// keeps every parameter symbolic.
    pub values: Option<Vec<BigRational>>,
}

impl RunConfig {
    pub fn symbolic(tower: TowerKind, n: usize) -> Self {
        Self { tower, n, values: None }
    }

    pub fn specialized(tower: TowerKind, n: usize, values: Vec<BigRational>) -> Self {
        Self { tower, n, values: Some(values) }
    }

    /// Builds the config from `name=value` assignments, which must cover
    /// every parameter of the tower.
    pub fn with_assignments(tower: TowerKind, n: usize, sets: &[(String, String)]) -> Result<Self> {
        let mut values = Vec::new();
        for var in tower.variables() {
            let raw = sets
                .iter()
                .rev()
                .find(|(k, _)| k == var)
                .map(|(_, v)| v)
                .ok_or_else(|| Error::Usage(format!("specialized mode needs a value for {var}")))?;
            let v = BigRational::from_str(raw.trim())
                .map_err(|_| Error::Usage(format!("cannot parse {var}={raw} as a rational")))?;
            values.push(v);
        }
        if let Some((k, _)) = sets.iter().find(|(k, _)| !tower.variables().contains(&k.as_str())) {
            return Err(Error::Usage(format!("{} has no parameter {k}", tower.name())));
        }
        Ok(Self::specialized(tower, n, values))
    }

    pub fn context(&self) -> Result<RingContext> {
        match &self.values {
            None => RingContext::symbolic(self.tower.variables()),
            Some(v) => RingContext::specialized(self.tower.variables(), v.clone()),
        }
    }

    pub fn mode(&self) -> &'static str {
        if self.values.is_some() {
            "specialized"
        } else {
            "symbolic"
        }
    }

    pub fn validate(&self, suite: Suite) -> Result<()> {
        verify::require_rank(self.n)?;
        let cap = max_rank(self.tower, self.values.is_some(), suite);
        if self.n > cap {
            return Err(Error::Usage(format!(
                "{} {suite} supports n <= {cap} in {} mode",
                self.tower.name(),
                self.mode()
            )));
        }
        if suite == Suite::Bridge && self.tower != TowerKind::TemperleyLieb {
            return Err(Error::Usage("the bridge suite applies to the tl tower only".into()));
        }
        Ok(())
    }
}

/// Runs one suite and collects its checks. Genericity violations abort the
/// run and report the parameter assignment.
pub fn run(cfg: &RunConfig, suite: Suite) -> Result<Report> {
    cfg.validate(suite)?;
    let ctx = cfg.context()?;
    let checks = if ctx.is_symbolic() {
        checks_for::<RationalFunction>(cfg, suite, &ctx)
    } else {
        checks_for::<Rat>(cfg, suite, &ctx)
    }
    .map_err(|e| match e {
        Error::GenericityViolation(msg) => {
            Error::GenericityViolation(format!("{msg} (parameters {})", ctx.assignment()))
        }
        other => other,
    })?;
    let params = match &cfg.values {
        None => Vec::new(),
        Some(_) => {
            let vals = ctx.values().unwrap_or_default();
            ctx.vars().iter().zip(vals).map(|(k, v)| (k.clone(), Rat(v.clone()).render(&ctx))).collect()
        }
    };
    Ok(Report { tower: cfg.tower, n: cfg.n, mode: cfg.mode().to_string(), params, checks })
}

fn checks_for<K: Scalar>(cfg: &RunConfig, suite: Suite, ctx: &RingContext) -> Result<Vec<Check>> {
    let (kind, n) = (cfg.tower, cfg.n);
    let alg = || Algebra::<K>::new(kind, n, ctx);
    Ok(match suite {
        Suite::Dims => {
            let mut out = Vec::new();
            for m in 1..=n {
                let a = Algebra::<K>::new(kind, m, ctx)?;
                out.extend(timed(|| Ok::<_, Error>(verify::dimension_checks(&a)))?.into_iter().map(|mut c| {
                    c.vertex = Some(format!("n={m}"));
                    c
                }));
            }
            out
        }
        Suite::Axioms => {
            let a = alg()?;
            let mut out = timed(|| verify::relation_checks(&a))?;
            out.extend(timed(|| verify::framework_checks::<K>(kind, n, ctx))?);
            out
        }
        Suite::Jm => timed(|| verify::jm_checks::<K>(kind, n, ctx))?,
        Suite::Spectrum => verify::module_checks(&alg()?)?,
        Suite::Gz => timed(|| verify::gz_checks(&alg()?))?,
        Suite::Branching => timed(|| verify::branching_checks::<K>(kind, n, ctx))?,
        Suite::Bridge => timed(|| verify::bridge_checks::<K>(n, ctx))?,
        Suite::All => {
            let mut out = Vec::new();
            for s in [Suite::Dims, Suite::Axioms, Suite::Jm, Suite::Spectrum, Suite::Gz, Suite::Branching] {
                out.extend(checks_for::<K>(cfg, s, ctx)?);
            }
            if kind == TowerKind::TemperleyLieb {
                out.extend(checks_for::<K>(cfg, Suite::Bridge, ctx)?);
            }
            out
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_zero_is_a_usage_error() {
        let cfg = RunConfig::symbolic(TowerKind::Bmw, 0);
        assert!(matches!(run(&cfg, Suite::Jm), Err(Error::Usage(_))));
    }

    #[test]
    fn assignments_must_cover_the_tower() {
        let sets = vec![("rho".to_string(), "5/3".to_string())];
        assert!(RunConfig::with_assignments(TowerKind::Bmw, 2, &sets).is_err());
        let sets = vec![("qhalf".to_string(), "5/3".to_string())];
        let cfg = RunConfig::with_assignments(TowerKind::TemperleyLieb, 2, &sets).unwrap();
        assert_eq!(cfg.mode(), "specialized");
    }

    #[test]
    fn genericity_violation_names_the_assignment() {
        // q = 1 kills the denominator of the derived loop value.
        let sets = vec![("rho".to_string(), "5/3".to_string()), ("q".to_string(), "1".to_string())];
        let cfg = RunConfig::with_assignments(TowerKind::Bmw, 2, &sets).unwrap();
        match run(&cfg, Suite::Dims) {
            Err(Error::GenericityViolation(msg)) => assert!(msg.contains("q=1"), "{msg}"),
            other => panic!("expected a genericity violation, got {other:?}"),
        }
    }
}
