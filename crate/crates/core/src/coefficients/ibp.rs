use crate::exact_algebra::diff::{dexpr, identity_residual};
use crate::exact_algebra::DiffExpr;
use crate::report::{Check, VerificationReport};

/// An identity `lhs = D(bracket) + remainder` in the differential ring.
/// `f0..f5` stand for `f, f', ..., f^(5)`; the same symbols are reused for the
/// angular quantities `g` and `h`, whose identities are one-dimensional in
/// `lambda`.
#[derive(Clone, Debug)]
pub struct IbpIdentity {
    pub id: &'static str,
    pub anchor: &'static str,
    pub lhs: &'static str,
    pub bracket: &'static str,
    pub remainder: &'static str,
}

impl IbpIdentity {
    pub fn residual(&self) -> crate::Result<DiffExpr> {
        identity_residual(&dexpr(self.lhs), &dexpr(self.bracket), &dexpr(self.remainder))
    }

    pub fn check(&self) -> Check {
        match self.residual() {
            Ok(r) if r.is_zero() => Check::new(self.id, self.anchor, true, ""),
            Ok(r) => Check::new(self.id, self.anchor, false, format!("residual = {r}")),
            Err(e) => Check::new(self.id, self.anchor, false, e.to_string()),
        }
    }
}

pub fn ibp_catalog() -> Vec<IbpIdentity> {
    vec![
        IbpIdentity {
            id: "ibp.l5-f5-f1",
            anchor: "l^5 f''''' f' = [l^5 f''''f' - l^5 f'''f'' - 5l^4 f'''f' + 20l^3 f''f' - 30l^2 f'f']' + 60l f'^2 - 20l^3 f''^2 + l^5 f'''^2 + 10l^4 f'''f''",
            lhs: "lambda^5*f5*f1",
            bracket: "lambda^5*f4*f1 - lambda^5*f3*f2 - 5*lambda^4*f3*f1 + 20*lambda^3*f2*f1 - 30*lambda^2*f1*f1",
            remainder: "60*lambda*f1^2 - 20*lambda^3*f2^2 + lambda^5*f3^2 + 10*lambda^4*f3*f2",
        },
        IbpIdentity {
            id: "ibp.l4-f4-f1",
            anchor: "l^4 f''''f' = [l^4 f'''f' - 4l^3 f''f' + 6l^2 f'f']' - 12l f'^2 + 4l^3 f''^2 - l^4 f'''f''",
            lhs: "lambda^4*f4*f1",
            bracket: "lambda^4*f3*f1 - 4*lambda^3*f2*f1 + 6*lambda^2*f1*f1",
            remainder: "-12*lambda*f1^2 + 4*lambda^3*f2^2 - lambda^4*f3*f2",
        },
        IbpIdentity {
            id: "ibp.l3-f3-f1",
            anchor: "l^3 f'''f' = [l^3 f''f' - (3l^2/2) f'f']' + 3l f'^2 - l^3 f''^2",
            lhs: "lambda^3*f3*f1",
            bracket: "lambda^3*f2*f1 - 3/2*lambda^2*f1*f1",
            remainder: "3*lambda*f1^2 - lambda^3*f2^2",
        },
        IbpIdentity {
            id: "ibp.l2-f2-f1",
            anchor: "l^2 f''f' = [(l^2/2) f'f']' - l f'^2",
            lhs: "lambda^2*f2*f1",
            bracket: "lambda^2/2*f1*f1",
            remainder: "-lambda*f1^2",
        },
        IbpIdentity {
            id: "ibp.neg-l5-f4-f2",
            anchor: "-l^5 f''''f'' = [-l^5 f'''f'']' + 5l^4 f'''f'' + l^5 f'''^2",
            lhs: "-lambda^5*f4*f2",
            bracket: "-lambda^5*f3*f2",
            remainder: "5*lambda^4*f3*f2 + lambda^5*f3^2",
        },
        IbpIdentity {
            id: "ibp.neg-l-f2-f0",
            anchor: "-l f''f = [-l f'f]' + f'f + l f'^2",
            lhs: "-lambda*f2*f0",
            bracket: "-lambda*f1*f0",
            remainder: "f1*f0 + lambda*f1^2",
        },
        IbpIdentity {
            id: "ibp.neg-5l4-f4-f1",
            anchor: "-5l^4 f''''f' = [-5l^4 f'''f' + 20l^3 f''f']' - 20l^3 f''^2 - 60l^2 f''f' + 5l^4 f'''f''",
            lhs: "-5*lambda^4*f4*f1",
            bracket: "-5*lambda^4*f3*f1 + 20*lambda^3*f2*f1",
            remainder: "-20*lambda^3*f2^2 - 60*lambda^2*f2*f1 + 5*lambda^4*f3*f2",
        },
        IbpIdentity {
            id: "ibp.neg-l3-f3-f1",
            anchor: "-l^3 f'''f' = [-l^3 f''f']' + 3l^2 f''f' + l^3 f''^2",
            lhs: "-lambda^3*f3*f1",
            bracket: "-lambda^3*f2*f1",
            remainder: "3*lambda^2*f2*f1 + lambda^3*f2^2",
        },
        IbpIdentity {
            id: "ibp.neg-l-g-g2",
            anchor: "-l g g'' = [-l g g']' + g g' + l g'^2",
            lhs: "-lambda*f0*f2",
            bracket: "-lambda*f0*f1",
            remainder: "f0*f1 + lambda*f1^2",
        },
        IbpIdentity {
            id: "ibp.neg-l-g-g2-closed",
            anchor: "-l g g'' = [-l g g' + g^2/2]' + l g'^2",
            lhs: "-lambda*f0*f2",
            bracket: "-lambda*f0*f1 + f0^2/2",
            remainder: "lambda*f1^2",
        },
        IbpIdentity {
            id: "ibp.neg-l3-h1-h3",
            anchor: "-l^3 h'h''' = [-(l^3/2) d/dl (h')^2]' + 3l^2 h'h'' + l^3 h''^2",
            lhs: "-lambda^3*f1*f3",
            bracket: "-lambda^3*f1*f2",
            remainder: "3*lambda^2*f1*f2 + lambda^3*f2^2",
        },
        IbpIdentity {
            id: "ibp.2l-h-h2",
            anchor: "2l h h'' = [2l h h' - h^2]' - 2l h'^2",
            lhs: "2*lambda*f0*f2",
            bracket: "2*lambda*f0*f1 - f0^2",
            remainder: "-2*lambda*f1^2",
        },
        IbpIdentity {
            id: "ibp.jordan-l4-f3-f2",
            anchor: "4l^4 f'''f'' = [2l^4 f''^2]' - 8l^3 f''^2",
            lhs: "4*lambda^4*f3*f2",
            bracket: "2*lambda^4*f2^2",
            remainder: "-8*lambda^3*f2^2",
        },
        IbpIdentity {
            id: "ibp.jordan-l2-f2-f1",
            anchor: "2l^2 f''f' = [l^2 f'^2]' - 2l f'^2",
            lhs: "2*lambda^2*f2*f1",
            bracket: "lambda^2*f1^2",
            remainder: "-2*lambda*f1^2",
        },
    ]
}

/// Two catalog entries as they are typeset, before correction. Both fail;
/// the corrected forms are in [`ibp_catalog`].
pub fn as_printed_variants() -> Vec<IbpIdentity> {
    vec![
        IbpIdentity {
            id: "ibp.printed.neg-l4-f4-f1",
            anchor: "-l^4 f''''f' = [-5l^4 f'''f' + 20l^3 f''f']' - 20l^3 f''^2 - 60l^2 f''f' + 5l^4 f'''f''",
            lhs: "-lambda^4*f4*f1",
            bracket: "-5*lambda^4*f3*f1 + 20*lambda^3*f2*f1",
            remainder: "-20*lambda^3*f2^2 - 60*lambda^2*f2*f1 + 5*lambda^4*f3*f2",
        },
        IbpIdentity {
            id: "ibp.printed.neg-l-g-g1",
            anchor: "-l g g' = [-g g']' + g g' + l g'^2",
            lhs: "-lambda*f0*f1",
            bracket: "-f0*f1",
            remainder: "f0*f1 + lambda*f1^2",
        },
    ]
}

pub fn verify_ibp_catalog() -> VerificationReport {
    let mut report = VerificationReport::new();
    for identity in ibp_catalog() {
        report.push(identity.check());
    }
    for printed in as_printed_variants() {
        let outcome = match printed.residual() {
            Ok(r) if r.is_zero() => "holds".to_owned(),
            Ok(r) => format!("fails with residual {r}"),
            Err(e) => format!("cannot be evaluated: {e}"),
        };
        report.note(format!(
            "typeset form `{}` {outcome}; the corrected form is checked instead",
            printed.anchor
        ));
    }
    report
}
