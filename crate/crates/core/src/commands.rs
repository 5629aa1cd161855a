//! Construction descriptors, verification presets and the output plumbing
//! behind the `zdigraph` binary.
//!
//! A descriptor is a JSON object tagged by `family`, for example
//! `{"family": "z_quotient", "delta": {"family": "theta", "n": 3}, "k": 2, "q": 6}`.
//! Base digraphs can also be written in the short form `theta:3`,
//! `complete:4`, `cycle:5` or `loops:2`.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::autsearch::{automorphism_group, SearchOptions};
use crate::constructions::{self as cons, ZCodec, ZLayout};
use crate::digraph::{Digraph, DigraphJson, LeveledDigraph};
use crate::error::{Error, Result};
use crate::tfaut;
use crate::transitivity::{self, TransitivityProfile};

/// Version stamp carried by every JSON document written here.
pub const SCHEMA: u32 = 1;

/// Environment variable naming the directory that relative `--out` paths are
/// resolved against.
pub const OUT_DIR_VAR: &str = "ZDIGRAPH_OUT_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Exit status for a failed command.
pub fn exit_code(err: &Error) -> i32 {
    if err.is_resource() {
        EXIT_RESOURCE
    } else {
        EXIT_USAGE
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum Descriptor {
    Theta {
        n: usize,
    },
    Complete {
        d: usize,
    },
    /// Complete digraph with a loop at every vertex.
    Loops {
        v: usize,
    },
    Cycle {
        n: usize,
    },
    Digraph {
        n: usize,
        arcs: Vec<[usize; 2]>,
    },
    Cdc {
        delta: Box<Descriptor>,
    },
    Cdhc {
        delta: Box<Descriptor>,
    },
    ZQuotient {
        delta: Box<Descriptor>,
        k: usize,
        q: usize,
    },
    ZWindow {
        delta: Box<Descriptor>,
        k: usize,
        lo: i64,
        hi: i64,
    },
    ShiftRegister {
        delta: Box<Descriptor>,
        k: usize,
        q: usize,
    },
    Praeger {
        r: usize,
        v: usize,
        m: usize,
    },
    OutTree {
        p: usize,
        depth: usize,
    },
    InTree {
        q: usize,
        depth: usize,
    },
    DiestelLeader {
        p: usize,
        q: usize,
        depth: usize,
    },
    FibreProduct {
        left: Box<Descriptor>,
        right: Box<Descriptor>,
    },
}

impl FromStr for Descriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::InvalidParameter(format!(
                "expected theta:N, complete:D, cycle:N or loops:V, got {s:?}"
            ))
        };
        let (name, value) = s.split_once(':').ok_or_else(bad)?;
        let value: usize = value.trim().parse().map_err(|_| bad())?;
        match name.trim() {
            "theta" => Ok(Descriptor::Theta { n: value }),
            "complete" => Ok(Descriptor::Complete { d: value }),
            "cycle" => Ok(Descriptor::Cycle { n: value }),
            "loops" => Ok(Descriptor::Loops { v: value }),
            _ => Err(bad()),
        }
    }
}

/// Parses a JSON descriptor; errors name the offending field path, such as
/// `descriptor.delta.n`.
pub fn parse_descriptor(text: &str) -> Result<Descriptor> {
    let value: Value = serde_json::from_str(text)?;
    parse_node(&value, "descriptor")
}

fn parse_node(value: &Value, path: &str) -> Result<Descriptor> {
    let fail = |msg: String| Error::InvalidParameter(msg);
    let obj = value
        .as_object()
        .ok_or_else(|| fail(format!("{path}: expected an object, found {value}")))?;
    for (key, field) in obj {
        let here = format!("{path}.{key}");
        match key.as_str() {
            "family" => {}
            "delta" | "left" | "right" => {
                parse_node(field, &here)?;
            }
            "arcs" => {
                let pairs = field.as_array().is_some_and(|arcs| {
                    arcs.iter().all(|a| {
                        a.as_array()
                            .is_some_and(|ends| ends.len() == 2 && ends.iter().all(Value::is_u64))
                    })
                });
                if !pairs {
                    return Err(fail(format!(
                        "{here}: expected a list of [tail, head] pairs"
                    )));
                }
            }
            _ if field.is_i64() || field.is_u64() => {}
            _ => return Err(fail(format!("{here}: expected an integer, found {field}"))),
        }
    }
    // children are valid, so remaining errors belong to this node
    serde_json::from_value(value.clone()).map_err(|e| fail(format!("{path}: {e}")))
}

/// A built digraph with whatever structure its family provides.
#[derive(Clone, Debug)]
pub struct Built {
    pub family: &'static str,
    pub graph: Digraph,
    pub labels: Option<Vec<Vec<i64>>>,
    pub levels: Option<Vec<i64>>,
    pub modulus: Option<u64>,
}

impl Built {
    fn plain(family: &'static str, graph: Digraph) -> Built {
        Built {
            family,
            graph,
            labels: None,
            levels: None,
            modulus: None,
        }
    }

    fn leveled(family: &'static str, g: &LeveledDigraph, labels: Vec<Vec<i64>>) -> Built {
        Built {
            family,
            graph: g.graph().clone(),
            labels: Some(labels),
            levels: Some(g.levels().to_vec()),
            modulus: g.modulus(),
        }
    }

    pub fn leveled_digraph(&self) -> Option<LeveledDigraph> {
        let levels = self.levels.clone()?;
        LeveledDigraph::new(self.graph.clone(), levels, self.modulus).ok()
    }

    pub fn to_json(&self) -> BuildOutput {
        let DigraphJson { n, arcs } = self.graph.to_json();
        BuildOutput {
            schema: SCHEMA,
            family: self.family,
            n,
            arcs,
            labels: self.labels.clone(),
            levels: self.levels.clone(),
            modulus: self.modulus,
        }
    }

    pub fn to_dot(&self, collapse_antiparallel: bool) -> String {
        let labels = self.labels.as_ref().map(|ls| {
            ls.iter()
                .map(|l| l.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
                .collect::<Vec<_>>()
        });
        self.graph.to_dot(labels.as_deref(), collapse_antiparallel)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BuildOutput {
    pub schema: u32,
    pub family: &'static str,
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
}

fn within(field: &str, r: Result<Built>) -> Result<Built> {
    r.map_err(|e| match e {
        Error::InvalidParameter(msg) => Error::InvalidParameter(format!("{field}: {msg}")),
        e if e.is_resource() => e,
        other => Error::InvalidParameter(format!("{field}: {other}")),
    })
}

fn require_leveled(field: &str, b: &Built) -> Result<LeveledDigraph> {
    b.leveled_digraph().ok_or_else(|| {
        Error::InvalidParameter(format!("{field}: family {} has no levels", b.family))
    })
}

fn z_labels(delta: &Digraph, k: usize, lo: i64, count: usize) -> Result<Vec<Vec<i64>>> {
    Ok(ZCodec::new(delta.vertex_count(), k, lo, count)?.labels())
}

impl Descriptor {
    pub fn build(&self) -> Result<Built> {
        use Descriptor as D;
        Ok(match self {
            D::Theta { n } => Built::plain("theta", cons::theta_cycle(*n)?),
            D::Complete { d } => Built::plain("complete", cons::complete_digraph(*d)?),
            D::Loops { v } => Built::plain("loops", cons::complete_with_loops(*v)?),
            D::Cycle { n } => Built::plain("cycle", cons::directed_cycle(*n)?),
            D::Digraph { n, arcs } => Built::plain(
                "digraph",
                Digraph::new(*n, arcs.iter().map(|a| (a[0], a[1])))?,
            ),
            D::Cdc { delta } | D::Cdhc { delta } => {
                let base = within("delta", delta.build())?.graph;
                let (family, cover) = match self {
                    D::Cdc { .. } => ("cdc", cons::cdc(&base)),
                    _ => ("cdhc", cons::cdhc(&base)),
                };
                Built {
                    labels: Some(cover.labels()),
                    ..Built::plain(family, cover.graph)
                }
            }
            D::ZQuotient { delta, k, q } => {
                let base = within("delta", delta.build())?.graph;
                let zq = cons::z_quotient(&base, *k, *q)?;
                Built::leveled("z_quotient", zq.leveled(), zq.codec().labels())
            }
            D::ZWindow { delta, k, lo, hi } => {
                let base = within("delta", delta.build())?.graph;
                let zw = cons::z_window(&base, *k, *lo, *hi)?;
                Built::leveled("z_window", zw.leveled(), zw.codec().labels())
            }
            D::ShiftRegister { delta, k, q } => {
                let base = within("delta", delta.build())?.graph;
                let g = cons::shift_register_quotient(&base, *k, *q)?;
                Built::leveled("shift_register", &g, z_labels(&base, *k, 0, *q)?)
            }
            D::Praeger { r, v, m } => {
                let g = cons::praeger_tuple_graph(*r, *v, *m)?;
                let base = cons::complete_with_loops(*v)?;
                Built::leveled("praeger", &g, z_labels(&base, *m, 0, *r)?)
            }
            D::OutTree { p, depth } => {
                let g = cons::out_tree_window(*p, *depth)?;
                let labels = level_labels(&g);
                Built::leveled("out_tree", &g, labels)
            }
            D::InTree { q, depth } => {
                let g = cons::in_tree_window(*q, *depth)?;
                let labels = level_labels(&g);
                Built::leveled("in_tree", &g, labels)
            }
            D::DiestelLeader { p, q, depth } => {
                let fp = cons::diestel_leader_window(*p, *q, *depth)?;
                Built::leveled("diestel_leader", &fp.graph, fp.labels())
            }
            D::FibreProduct { left, right } => {
                let l = within("left", left.build())?;
                let r = within("right", right.build())?;
                let fp = cons::fibre_product(
                    &require_leveled("left", &l)?,
                    &require_leveled("right", &r)?,
                )?;
                Built::leveled("fibre_product", &fp.graph, fp.labels())
            }
        })
    }
}

fn level_labels(g: &LeveledDigraph) -> Vec<Vec<i64>> {
    (0..g.graph().vertex_count())
        .map(|v| vec![g.level(v), v as i64])
        .collect()
}

/// A named parameter family together with the verdict it is expected to
/// produce. Only parameter validity is fixed in advance; verdicts are always
/// computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preset {
    /// Quotient of the coordinate construction over the theta cycle by the
    /// `q`-th power of the shift is sharply k-arc-transitive.
    SharpTheta { n: usize, k: usize, q: usize },
    /// The same over the complete digraph on `d + 1` vertices.
    SharpComplete { d: usize, k: usize, q: usize },
    /// The tuple digraph `C_r(v, m)` with `r > m` is sharply
    /// `(r - m)`-arc-transitive.
    Praeger { r: usize, v: usize, m: usize },
    /// The tuple reversal is an involution carrying the coordinate-rule arcs
    /// onto the shift-register arcs.
    ThetaIso {
        delta: Descriptor,
        k: usize,
        q: usize,
    },
    /// `(b a^i, b a^{i+1})` are two-fold automorphisms of the theta cycle and
    /// the dihedral group is psi-stable and psi-arc-transitive.
    TfDihedral { n: usize },
    /// The complete digraph is stable and the fibre stabiliser of its level-0
    /// fibre in the quotient is trivial.
    StableComplete { d: usize },
}

impl Preset {
    pub fn name(&self) -> &'static str {
        match self {
            Preset::SharpTheta { .. } => "sharp-theta",
            Preset::SharpComplete { .. } => "sharp-complete",
            Preset::Praeger { .. } => "praeger",
            Preset::ThetaIso { .. } => "theta-iso",
            Preset::TfDihedral { .. } => "tf-dihedral",
            Preset::StableComplete { .. } => "stable-complete",
        }
    }

    pub fn description(&self) -> String {
        match self {
            Preset::SharpTheta { n, k, q } => format!(
                "Z(Theta_{n}, {k}) / <s^{q}> is sharply {k}-arc-transitive"
            ),
            Preset::SharpComplete { d, k, q } => format!(
                "Z(K_{}, {k}) / <s^{q}> has valency {d} and is sharply {k}-arc-transitive",
                d + 1
            ),
            Preset::Praeger { r, v, m } => format!(
                "C_{r}({v}, {m}) is sharply {}-arc-transitive",
                r.saturating_sub(*m)
            ),
            Preset::ThetaIso { k, q, .. } => format!(
                "theta is an involution mapping Z(delta, {k}) / <s^{q}> onto the shift-register digraph"
            ),
            Preset::TfDihedral { n } => format!(
                "(b a^i, b a^(i+1)) lie in TF(Theta_{n}); the dihedral group is psi-stable and psi-arc-transitive"
            ),
            Preset::StableComplete { d } => format!(
                "K_{d} is stable and the level-0 fibre stabiliser of Z(K_{d}, 2) / <s^4> is trivial"
            ),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match *self {
            Preset::SharpTheta { n, k, q } => {
                if n < 3 || k == 0 || q == 0 || q % (k * n) != 0 {
                    return bad(format!(
                        "sharp-theta needs n >= 3, k >= 1 and kn | q (n={n}, k={k}, q={q})"
                    ));
                }
            }
            Preset::SharpComplete { d, k, q } => {
                if d < 1 || k == 0 || q % k != 0 || q / k < 2 {
                    return bad(format!(
                        "sharp-complete needs d >= 1, k | q and q / k > 1 (d={d}, k={k}, q={q})"
                    ));
                }
            }
            Preset::Praeger { r, v, m } => {
                if r <= m || v < 2 || m == 0 {
                    return bad(format!(
                        "praeger needs r > m >= 1 and v >= 2 (r={r}, v={v}, m={m})"
                    ));
                }
            }
            Preset::ThetaIso { k, q, .. } => {
                if k == 0 || q == 0 || q % k != 0 {
                    return bad(format!("theta-iso needs k | q (k={k}, q={q})"));
                }
            }
            Preset::TfDihedral { n } => {
                if n < 3 {
                    return bad(format!("tf-dihedral needs n >= 3, got {n}"));
                }
            }
            Preset::StableComplete { d } => {
                if d < 2 {
                    return bad(format!("stable-complete needs d >= 2, got {d}"));
                }
            }
        }
        Ok(())
    }

    fn parameters(&self) -> Value {
        match self {
            Preset::SharpTheta { n, k, q } => json!({ "n": n, "k": k, "q": q }),
            Preset::SharpComplete { d, k, q } => json!({ "d": d, "k": k, "q": q }),
            Preset::Praeger { r, v, m } => json!({ "r": r, "v": v, "m": m }),
            Preset::ThetaIso { delta, k, q } => json!({ "delta": delta, "k": k, "q": q }),
            Preset::TfDihedral { n } => json!({ "n": n }),
            Preset::StableComplete { d } => json!({ "d": d }),
        }
    }

    pub fn run(&self, options: SearchOptions) -> Result<VerifyReport> {
        self.validate()?;
        let mut checks = Vec::new();
        let mut profile = None;
        match self {
            Preset::SharpTheta { n, k, q } => {
                let zq = cons::z_quotient(&cons::theta_cycle(*n)?, *k, *q)?;
                let p = transitivity::transitivity_profile(zq.graph(), k + 1, options)?;
                sharpness_checks(&mut checks, &p, *k);
                profile = Some(p);
            }
            Preset::SharpComplete { d, k, q } => {
                let zq = cons::z_quotient(&cons::complete_digraph(d + 1)?, *k, *q)?;
                let p = transitivity::transitivity_profile(zq.graph(), k + 1, options)?;
                sharpness_checks(&mut checks, &p, *k);
                profile = Some(p);
            }
            Preset::Praeger { r, v, m } => {
                let g = cons::praeger_tuple_graph(*r, *v, *m)?;
                let sharp = r - m;
                let p = transitivity::transitivity_profile(g.graph(), sharp + 1, options)?;
                sharpness_checks(&mut checks, &p, sharp);
                profile = Some(p);
            }
            Preset::ThetaIso { delta, k, q } => {
                let base = within("delta", delta.build())?.graph;
                let zq = cons::z_quotient(&base, *k, *q)?;
                let theta = cons::theta_isomorphism(&zq);
                checks.push(Check::new(
                    "theta_squared_is_identity",
                    json!(true),
                    json!(theta.then(&theta).is_identity()),
                ));
                let register = cons::shift_register_quotient(&base, *k, *q)?;
                let mut mapped: Vec<(usize, usize)> = zq
                    .graph()
                    .arcs()
                    .map(|(u, v)| (theta.image(u), theta.image(v)))
                    .collect();
                mapped.sort_unstable();
                let target: Vec<(usize, usize)> = register.graph().arcs().collect();
                checks.push(Check::new(
                    "theta_maps_arc_set_onto_shift_register",
                    json!(true),
                    json!(mapped == target),
                ));
            }
            Preset::TfDihedral { n } => {
                let theta = cons::theta_cycle(*n)?;
                let h = tfaut::dihedral_theta_group(*n)?;
                let mut good = 0;
                for (i, g) in h.elements().iter().enumerate() {
                    if tfaut::is_tf_pair(&theta, g, h.element(h.psi(i)))? {
                        good += 1;
                    }
                }
                checks.push(Check::new("tf_pairs", json!(2 * n), json!(good)));
                checks.push(Check::new("psi_order", json!(n), json!(h.psi_order())));
                checks.push(Check::new(
                    "psi_stable",
                    json!(true),
                    json!(tfaut::is_psi_stable(&theta, &h)?),
                ));
                checks.push(Check::new(
                    "psi_arc_transitive",
                    json!(true),
                    json!(tfaut::is_psi_arc_transitive(&theta, &h)?),
                ));
            }
            Preset::StableComplete { d } => {
                let kd = cons::complete_digraph(*d)?;
                checks.push(Check::new(
                    "stable",
                    json!(true),
                    json!(tfaut::is_stable_with(&kd, options)?),
                ));
                let zq = cons::z_quotient(&kd, 2, 4)?;
                let group = automorphism_group(zq.graph(), options)?;
                checks.push(Check::new(
                    "fiber_stabilizer_trivial",
                    json!(true),
                    json!(transitivity::fiber_stabilizer_triviality(
                        zq.leveled(),
                        &group,
                        0
                    )?),
                ));
            }
        }
        Ok(VerifyReport::new(
            self.name().to_string(),
            self.description(),
            self.parameters(),
            checks,
            profile,
        ))
    }
}

fn sharpness_checks(checks: &mut Vec<Check>, p: &TransitivityProfile, k: usize) {
    checks.push(Check::new("sharp_k", json!(k), json!(p.sharp_k)));
    checks.push(Check::new(
        "not_transitive_on_next_arcs",
        json!(true),
        json!(p.not_transitive_above),
    ));
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
}

impl Check {
    pub fn new(name: &'static str, expected: Value, observed: Value) -> Check {
        let pass = expected == observed;
        Check {
            name,
            expected,
            observed,
            pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub preset: String,
    pub description: String,
    pub parameters: Value,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<TransitivityProfile>,
    pub pass: bool,
}

impl VerifyReport {
    fn new(
        preset: String,
        description: String,
        parameters: Value,
        checks: Vec<Check>,
        profile: Option<TransitivityProfile>,
    ) -> VerifyReport {
        let pass = checks.iter().all(|c| c.pass);
        VerifyReport {
            schema: SCHEMA,
            preset,
            description,
            parameters,
            checks,
            profile,
            pass,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.pass {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.preset, self.description)?;
        if let Some(p) = &self.profile {
            writeln!(
                f,
                "  |V| = {}, |A| = {}, |Aut| = {}, orbits on k-arcs: {:?}",
                p.vertex_count, p.arc_count, p.group_order, p.orbit_counts
            )?;
        }
        for c in &self.checks {
            let mark = if c.pass { "ok" } else { "MISMATCH" };
            writeln!(
                f,
                "  {:<40} expected {} observed {}  {mark}",
                c.name, c.expected, c.observed
            )?;
        }
        write!(f, "{}", if self.pass { "PASS" } else { "FAIL" })
    }
}

/// Orbit profile of an arbitrary descriptor, optionally compared against an
/// expected `sharp_k`.
pub fn verify_descriptor(
    descriptor: &Descriptor,
    k_max: usize,
    expect_sharp: Option<usize>,
    options: SearchOptions,
) -> Result<VerifyReport> {
    let built = descriptor.build()?;
    let p = transitivity::transitivity_profile(&built.graph, k_max, options)?;
    let mut checks = Vec::new();
    if let Some(k) = expect_sharp {
        checks.push(Check::new("sharp_k", json!(k), json!(p.sharp_k)));
        if k < k_max {
            checks.push(Check::new(
                "not_transitive_on_next_arcs",
                json!(true),
                json!(p.not_transitive_above),
            ));
        }
    }
    Ok(VerifyReport::new(
        "descriptor".into(),
        format!("orbit profile of {} up to {k_max}-arcs", built.family),
        serde_json::to_value(descriptor)?,
        checks,
        Some(p),
    ))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthOutput {
    pub schema: u32,
    #[serde(flatten)]
    pub sequence: transitivity::GrowthSequence,
}

pub fn growth_output(k: usize, n_max: usize) -> Result<GrowthOutput> {
    Ok(GrowthOutput {
        schema: SCHEMA,
        sequence: transitivity::growth_ball(k, n_max)?,
    })
}

/// Resolves `path` against the output-directory variable when it is relative.
pub fn resolve_out_path(path: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_VAR) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

/// Writes `content` to `path` via a temporary file in the same directory and
/// a rename, so readers never see a partial file.
pub fn write_atomic(path: &Path, content: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    std::fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(content.as_bytes())?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_forms() {
        assert_eq!(
            "theta:3".parse::<Descriptor>().unwrap(),
            Descriptor::Theta { n: 3 }
        );
        assert_eq!(
            "complete:4".parse::<Descriptor>().unwrap(),
            Descriptor::Complete { d: 4 }
        );
        assert!("theta".parse::<Descriptor>().is_err());
        assert!("wheel:5".parse::<Descriptor>().is_err());
    }

    #[test]
    fn json_descriptors() {
        let d = parse_descriptor(
            r#"{"family":"z_quotient","delta":{"family":"theta","n":3},"k":2,"q":6}"#,
        )
        .unwrap();
        let built = d.build().unwrap();
        assert_eq!(built.graph.vertex_count(), 54);
        assert_eq!(built.modulus, Some(6));
        assert_eq!(built.labels.as_ref().unwrap()[0], vec![0, 0, 0]);

        let err = parse_descriptor(
            r#"{"family":"z_quotient","delta":{"family":"theta","n":3},"k":"two","q":6}"#,
        )
        .unwrap_err()
        .to_string();
        assert!(err.contains("descriptor.k"), "{err}");
        let err = parse_descriptor(r#"{"family":"cdc","delta":{"family":"theta"}}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("descriptor.delta: missing field `n`"), "{err}");
        let err = Descriptor::ZQuotient {
            delta: Box::new(Descriptor::Theta { n: 2 }),
            k: 2,
            q: 6,
        }
        .build()
        .unwrap_err()
        .to_string();
        assert!(err.contains("delta"), "{err}");
    }

    #[test]
    fn fibre_product_descriptor() {
        let d = parse_descriptor(
            r#"{"family":"fibre_product",
                "left":{"family":"out_tree","p":2,"depth":2},
                "right":{"family":"in_tree","q":2,"depth":2}}"#,
        )
        .unwrap();
        let built = d.build().unwrap();
        assert_eq!(built.graph.vertex_count(), 4 + 4 + 4);
        let bad = Descriptor::FibreProduct {
            left: Box::new(Descriptor::Theta { n: 3 }),
            right: Box::new(Descriptor::OutTree { p: 2, depth: 1 }),
        };
        assert!(bad.build().unwrap_err().to_string().contains("left"));
    }

    #[test]
    fn build_json_is_stable() {
        let built = Descriptor::Theta { n: 3 }.build().unwrap();
        let text = serde_json::to_string(&built.to_json()).unwrap();
        assert_eq!(
            text,
            r#"{"schema":1,"family":"theta","n":3,"arcs":[[0,0],[0,1],[1,1],[1,2],[2,0],[2,2]]}"#
        );
    }

    #[test]
    fn presets_validate_parameters() {
        let opts = SearchOptions::default();
        assert!(Preset::SharpTheta { n: 3, k: 2, q: 4 }.run(opts).is_err());
        assert!(Preset::SharpComplete { d: 2, k: 2, q: 2 }
            .run(opts)
            .is_err());
        assert!(Preset::Praeger { r: 2, v: 2, m: 2 }.run(opts).is_err());
    }

    #[test]
    fn presets_pass() {
        let opts = SearchOptions::default();
        for preset in [
            Preset::SharpTheta { n: 3, k: 2, q: 6 },
            Preset::SharpComplete { d: 2, k: 2, q: 4 },
            Preset::Praeger { r: 4, v: 2, m: 2 },
            Preset::ThetaIso {
                delta: Descriptor::Theta { n: 3 },
                k: 2,
                q: 6,
            },
            Preset::TfDihedral { n: 4 },
            Preset::StableComplete { d: 3 },
        ] {
            let report = preset.run(opts).unwrap();
            assert!(report.pass, "{report}");
        }
    }

    #[test]
    fn descriptor_verdicts() {
        let opts = SearchOptions::default();
        let r = verify_descriptor(&Descriptor::Cycle { n: 3 }, 4, Some(4), opts).unwrap();
        assert!(r.pass);
        let r = verify_descriptor(&Descriptor::Cycle { n: 3 }, 4, Some(2), opts).unwrap();
        assert!(!r.pass);
        assert_eq!(r.exit_code(), EXIT_MISMATCH);
    }

    #[test]
    fn atomic_write() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("nested/out.json");
        write_atomic(&path, "{}").unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "{}");
        write_atomic(&path, "[1]").unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "[1]");
    }
}
