use std::fmt::Write as _;
use std::io::ErrorKind;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use orbistack::exactmath::{IntegerMatrix, LatticeIndex, QuadraticNumber};
use orbistack::groupoid::{
    action_groupoid, factor_morita, is_morita_action, orbits, ActionSpec, FiniteAction,
    GroupoidError, MoritaVerdict, MoritaWitness, MorphismFile,
};
use orbistack::lens::{self, Level};
use orbistack::lifted::commutator_lattice;
use orbistack::rotation::{brute_force_equiv_oracle, cf_expand, gl2z_equivalent, OracleResult};
use orbistack::toral::{
    toral_stack_equiv, Branch, ConjugacyConfig, ConjugacyVerdict, Method, Status, ToralError,
};
use serde_json::{json, Value};

use crate::expr::{parse_matrix, parse_quadratic, ExprError};
use crate::report::{
    Failure, Finding, EXIT_DATA, EXIT_FALSE, EXIT_INTERNAL, EXIT_NO_INPUT, EXIT_TRUE, EXIT_UNKNOWN,
};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn parse_failure(flag: &str, text: &str, e: ExprError) -> Failure {
    let mut f = Failure::new(EXIT_DATA, "parse", format!("{flag}: {e}"));
    if let Some(offset) = e.offset() {
        f.location = Some((flag.to_string(), text.to_string(), offset));
    }
    f
}

fn quadratic_arg(flag: &str, text: &str) -> Result<QuadraticNumber, Failure> {
    parse_quadratic(text).map_err(|e| parse_failure(flag, text, e))
}

fn matrix_arg(flag: &str, text: &str) -> Result<IntegerMatrix, Failure> {
    parse_matrix(text).map_err(|e| parse_failure(flag, text, e))
}

/// A JSON number when it fits in `i64`, otherwise a decimal string.
fn big_json(n: &BigInt) -> Value {
    n.to_i64()
        .map_or_else(|| Value::from(n.to_string()), Value::from)
}

fn matrix_json(m: &IntegerMatrix) -> Value {
    serde_json::to_value(m).expect("matrix serializes")
}

pub fn rotation_equiv(
    tau_text: &str,
    sigma_text: &str,
    oracle_bound: Option<u32>,
) -> Result<Finding, Failure> {
    let tau = quadratic_arg("--tau", tau_text)?;
    let sigma = quadratic_arg("--sigma", sigma_text)?;
    let (cf_tau, cf_sigma) = (cf_expand(&tau), cf_expand(&sigma));
    let verdict = gl2z_equivalent(&tau, &sigma);
    let mut human = String::new();
    writeln!(human, "tau: {tau} = {cf_tau}").unwrap();
    writeln!(human, "sigma: {sigma} = {cf_sigma}").unwrap();
    writeln!(human, "equivalent: {}", yes_no(verdict.equivalent)).unwrap();
    writeln!(human, "reason: {}", verdict.reason).unwrap();
    if let Some(w) = &verdict.witness {
        writeln!(human, "witness: {w}").unwrap();
    }
    let mut details = json!({
        "tau": { "value": tau.to_string(), "continued_fraction": cf_tau.to_string() },
        "sigma": { "value": sigma.to_string(), "continued_fraction": cf_sigma.to_string() },
        "equivalent": verdict.equivalent,
        "reason": verdict.reason,
        "witness": verdict.witness.as_ref().map(matrix_json),
    });
    if let Some(bound) = oracle_bound {
        let found = match brute_force_equiv_oracle(&tau, &sigma, bound) {
            OracleResult::Found(m) => Some(m),
            OracleResult::NotFoundWithinBound => None,
        };
        if found.is_some() && !verdict.equivalent {
            return Err(Failure::new(
                EXIT_INTERNAL,
                "internal",
                "oracle found a homography for a pair judged inequivalent",
            ));
        }
        match &found {
            Some(m) => writeln!(human, "oracle (bound {bound}): found {m}").unwrap(),
            None => writeln!(human, "oracle (bound {bound}): not found").unwrap(),
        }
        details["oracle"] = json!({ "bound": bound, "found": found.as_ref().map(matrix_json) });
    }
    let (word, code) = if verdict.equivalent {
        ("equivalent", EXIT_TRUE)
    } else {
        ("not_equivalent", EXIT_FALSE)
    };
    Ok(Finding::new(word, code, human, details))
}

fn conjugacy_json(v: &ConjugacyVerdict) -> Value {
    json!({
        "status": v.status,
        "method": v.method,
        "certificate": v.certificate.as_ref().map(matrix_json),
        "obstruction": v.obstruction,
        "bound": v.bound,
        "notes": v.notes,
    })
}

fn toral_failure(e: ToralError) -> Failure {
    match e {
        ToralError::Exact(inner) => Failure::new(EXIT_INTERNAL, "internal", inner.to_string()),
        other => Failure::new(EXIT_DATA, "data", other.to_string()),
    }
}

pub fn toral_equiv(
    a_text: &str,
    b_text: &str,
    method: Method,
    bound: u32,
) -> Result<Finding, Failure> {
    let a = matrix_arg("--a", a_text)?;
    let b = matrix_arg("--b", b_text)?;
    let v = toral_stack_equiv(&a, &b, ConjugacyConfig { method, bound }).map_err(toral_failure)?;
    let mut human = String::new();
    writeln!(human, "A: {a}").unwrap();
    writeln!(human, "B: {b}").unwrap();
    writeln!(human, "stack equivalent: {}", v.status).unwrap();
    let describe = |human: &mut String, label: &str, c: &ConjugacyVerdict| {
        let mut line = format!("{label}: {} by {}", c.status, c.method);
        if let Some(o) = &c.obstruction {
            write!(line, " ({o})").unwrap();
        }
        if let (Status::Unknown, Some(bound)) = (c.status, c.bound) {
            write!(line, " (no conjugator with entries up to {bound})").unwrap();
        }
        writeln!(human, "{line}").unwrap();
        for note in &c.notes {
            writeln!(human, "note: {note}").unwrap();
        }
    };
    describe(&mut human, "A ~ B", &v.direct);
    if let Some(inv) = &v.inverse {
        describe(&mut human, "A ~ B^-1", inv);
    }
    if let Some(p) = v.certificate() {
        let target = match v.branch {
            Some(Branch::Inverse) => "B^-1",
            _ => "B",
        };
        writeln!(human, "certificate: P = {p} with P*A*P^-1 = {target}").unwrap();
    }
    let details = json!({
        "a": matrix_json(&a),
        "b": matrix_json(&b),
        "status": v.status,
        "branch": v.branch,
        "certificate": v.certificate().map(matrix_json),
        "direct": conjugacy_json(&v.direct),
        "inverse": v.inverse.as_ref().map(conjugacy_json),
    });
    let code = match v.status {
        Status::Yes => EXIT_TRUE,
        Status::No => EXIT_FALSE,
        Status::Unknown => EXIT_UNKNOWN,
    };
    Ok(Finding::new(v.status.to_string(), code, human, details))
}

fn lens_failure(e: lens::LensError) -> Failure {
    Failure::new(EXIT_DATA, "data", e.to_string())
}

fn classes_text(classes: &[Vec<u64>]) -> String {
    classes
        .iter()
        .map(|c| {
            format!(
                "{{{}}}",
                c.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn lens_classify(p: i64) -> Result<Finding, Failure> {
    let c = lens::classify(p).map_err(lens_failure)?;
    let mut human = format!("p: {}\n", c.p);
    for level in Level::ALL {
        let classes = c.classes(level);
        let noun = if classes.len() == 1 {
            "class"
        } else {
            "classes"
        };
        writeln!(
            human,
            "{level} ({} {noun}): {}",
            classes.len(),
            classes_text(classes)
        )
        .unwrap();
    }
    let details = serde_json::to_value(&c).expect("classification serializes");
    Ok(Finding::new("ok", EXIT_TRUE, human, details))
}

pub fn lens_equiv(p: i64, q: i64, q2: i64, level: Level) -> Result<Finding, Failure> {
    let eq = lens::equiv(level, p, q, q2).map_err(lens_failure)?;
    let mut human = format!(
        "L({p},{q}) ~ L({p},{q2}) at level {level}: {}\n",
        yes_no(eq)
    );
    let others: Vec<String> = Level::ALL
        .iter()
        .filter(|&&l| l != level)
        .map(|&l| {
            Ok::<_, Failure>(format!(
                "{l}: {}",
                yes_no(lens::equiv(l, p, q, q2).map_err(lens_failure)?)
            ))
        })
        .collect::<Result<_, _>>()?;
    writeln!(human, "other levels: {}", others.join(", ")).unwrap();
    let details = json!({ "p": p, "q": q, "q2": q2, "level": level, "equivalent": eq });
    let (word, code) = if eq {
        ("equivalent", EXIT_TRUE)
    } else {
        ("not_equivalent", EXIT_FALSE)
    };
    Ok(Finding::new(word, code, human, details))
}

fn load_morphism(
    path: &str,
) -> Result<
    (
        FiniteAction,
        FiniteAction,
        orbistack::groupoid::ActionMorphism,
    ),
    Failure,
> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        let why = match e.kind() {
            ErrorKind::NotFound => "no such file".to_string(),
            _ => e.to_string(),
        };
        Failure::new(EXIT_NO_INPUT, "input", format!("cannot read {path}: {why}"))
    })?;
    let file = MorphismFile::from_json(&text)
        .map_err(|e| Failure::new(EXIT_DATA, "data", e.to_string()))?;
    file.resolve()
        .map_err(|e| Failure::new(EXIT_DATA, "data", e.to_string()))
}

fn plural(n: usize, noun: &str) -> String {
    format!("{n} {noun}{}", if n == 1 { "" } else { "s" })
}

fn summary(act: &FiniteAction) -> String {
    let n_orbits = orbits(&action_groupoid(act)).len();
    format!(
        "{}, group of order {}, {}",
        plural(act.n_objects(), "object"),
        act.group().order(),
        plural(n_orbits, "orbit")
    )
}

fn witness_text(w: &MoritaWitness) -> String {
    match w {
        MoritaWitness::UnreachedOrbit { object } => {
            format!("the orbit of codomain object {object} is not reached")
        }
        MoritaWitness::NotInjective {
            source,
            target,
            arrows,
        } => {
            format!(
                "arrows {} and {} from {source} to {target} have the same image",
                arrows[0], arrows[1]
            )
        }
        MoritaWitness::NotSurjective {
            source,
            target,
            missing,
        } => {
            format!(
                "codomain arrow {missing} between the images of {source} and {target} is not hit"
            )
        }
    }
}

fn morita_lines(human: &mut String, v: &MoritaVerdict) {
    writeln!(
        human,
        "essentially surjective: {}",
        yes_no(v.essentially_surjective)
    )
    .unwrap();
    writeln!(human, "fully faithful: {}", yes_no(v.fully_faithful)).unwrap();
    writeln!(human, "morita: {}", yes_no(v.morita)).unwrap();
    if let Some(w) = &v.witness {
        writeln!(human, "witness: {}", witness_text(w)).unwrap();
    }
}

pub fn groupoid_morita(path: &str) -> Result<Finding, Failure> {
    let (dom, cod, mor) = load_morphism(path)?;
    let v = is_morita_action(&dom, &cod, &mor)
        .map_err(|e| Failure::new(EXIT_DATA, "data", e.to_string()))?;
    let mut human = format!("domain: {}\ncodomain: {}\n", summary(&dom), summary(&cod));
    morita_lines(&mut human, &v);
    let details = serde_json::to_value(&v).expect("verdict serializes");
    let (word, code) = if v.morita {
        ("morita", EXIT_TRUE)
    } else {
        ("not_morita", EXIT_FALSE)
    };
    Ok(Finding::new(word, code, human, details))
}

fn set_text(v: &[usize]) -> String {
    format!(
        "{{{}}}",
        v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    )
}

pub fn groupoid_factor(path: &str) -> Result<Finding, Failure> {
    let (dom, cod, mor) = load_morphism(path)?;
    let mut human = format!("domain: {}\ncodomain: {}\n", summary(&dom), summary(&cod));
    match factor_morita(&dom, &cod, &mor) {
        Ok(f) => {
            writeln!(human, "kernel: {}", set_text(&f.kernel)).unwrap();
            writeln!(
                human,
                "kernel acts freely: {}",
                yes_no(f.quotient.kernel_acts_freely)
            )
            .unwrap();
            writeln!(human, "quotient: {}", summary(&f.quotient.action)).unwrap();
            writeln!(human, "induced group map: {:?}", f.iso.lambda).unwrap();
            writeln!(human, "induced object map: {:?}", f.iso.phi).unwrap();
            writeln!(human, "induced map is an isomorphism: yes").unwrap();
            let details = json!({
                "factored": true,
                "kernel": f.kernel,
                "kernel_acts_freely": f.quotient.kernel_acts_freely,
                "quotient": ActionSpec::from_action(&f.quotient.action),
                "cosets": f.quotient.cosets,
                "object_classes": f.quotient.object_classes,
                "iso": { "lambda": f.iso.lambda, "phi": f.iso.phi },
            });
            Ok(Finding::new("factored", EXIT_TRUE, human, details))
        }
        Err(GroupoidError::NotMorita(v)) => {
            morita_lines(&mut human, &v);
            writeln!(human, "not factored: the morphism is not Morita").unwrap();
            let details = json!({ "factored": false, "reason": "not_morita", "morita": *v });
            Ok(Finding::new("not_factored", EXIT_FALSE, human, details))
        }
        Err(GroupoidError::InducedNotIsomorphism {
            lambda_bijective,
            phi_bijective,
        }) => {
            writeln!(human, "not factored: the induced map is not an isomorphism").unwrap();
            writeln!(
                human,
                "induced group map bijective: {}",
                yes_no(lambda_bijective)
            )
            .unwrap();
            writeln!(
                human,
                "induced object map bijective: {}",
                yes_no(phi_bijective)
            )
            .unwrap();
            let details = json!({
                "factored": false,
                "reason": "induced_not_isomorphism",
                "lambda_bijective": lambda_bijective,
                "phi_bijective": phi_bijective,
            });
            Ok(Finding::new("not_factored", EXIT_FALSE, human, details))
        }
        Err(e @ GroupoidError::InternalCheckFailed(_)) => {
            Err(Failure::new(EXIT_INTERNAL, "internal", e.to_string()))
        }
        Err(e) => Err(Failure::new(EXIT_DATA, "data", e.to_string())),
    }
}

fn vector_text(v: &[BigInt]) -> String {
    format!(
        "({})",
        v.iter()
            .map(BigInt::to_string)
            .collect::<Vec<_>>()
            .join(",")
    )
}

pub fn lifted_commutator_lattice(text: &str, k_max: u32) -> Result<Finding, Failure> {
    let a = matrix_arg("--matrix", text)?;
    let lattice = commutator_lattice(&a, k_max)
        .map_err(|e| Failure::new(EXIT_DATA, "data", e.to_string()))?;
    let basis = lattice.basis.basis();
    let mut human = format!("A: {a}\nk_max: {k_max}\n");
    let basis_text = if basis.is_empty() {
        "(empty)".to_string()
    } else {
        basis
            .iter()
            .map(|v| vector_text(v))
            .collect::<Vec<_>>()
            .join(" ")
    };
    writeln!(human, "basis: {basis_text}").unwrap();
    writeln!(human, "rank: {}", lattice.basis.rank()).unwrap();
    writeln!(human, "index: {}", lattice.index).unwrap();
    let basis_json: Vec<Vec<Value>> = basis
        .iter()
        .map(|v| v.iter().map(big_json).collect())
        .collect();
    let index_json = match &lattice.index {
        LatticeIndex::Finite(k) => big_json(k),
        LatticeIndex::Infinite => Value::from("infinite"),
    };
    let details = json!({
        "matrix": matrix_json(&a),
        "k_max": k_max,
        "basis": basis_json,
        "rank": lattice.basis.rank(),
        "index": index_json,
    });
    Ok(Finding::new("ok", EXIT_TRUE, human, details))
}
