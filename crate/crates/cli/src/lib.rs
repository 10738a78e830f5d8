//! The `kinesphere` command line.
//!
//! [`execute`] runs one command line against caller-supplied output
//! streams and returns the process exit status:
//!
//! * `0` on success,
//! * `1` for usage errors and for a `check` run with failures,
//! * `2` for parse and domain errors.

pub mod check;
pub mod render;

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use kinesphere::notation::DeviceExpr;
use kinesphere::{
    apply_device_on_clock, normal_zone, parse_sequence, BodyPlane, Direction, Limb, OrbitPartition,
    PermGroup, Polyhedron, ScaleLibrary, Script, Solid, TraceForm,
};

use render::{Format, RenderSpec, Show};

#[derive(Debug, Parser)]
#[command(
    name = "kinesphere",
    version,
    about = "Symmetry and choreographic devices on the Laban reference solids"
)]
struct Cli {
    /// Scale and trace-form JSON file (defaults to the bundled configuration)
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupFlavor {
    /// Rotations only
    Rot,
    /// Rotations and reflections
    Full,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Vertex, direction and adjacency tables for a solid
    Info {
        solid: String,
        /// Print the solid as JSON instead
        #[arg(long)]
        json: bool,
    },
    /// Orbit partition of a symmetry group or one of its stabilizers
    Orbits {
        solid: String,
        #[arg(long, value_enum, default_value = "rot")]
        group: GroupFlavor,
        /// Vertex or comma-separated vertex set to stabilize (v5, 5 or MRF)
        #[arg(long, value_name = "V|SET")]
        stab: Option<String>,
        /// Stabilize the four vertices of a body plane (icosahedron)
        #[arg(long, value_name = "PLANE", conflicts_with = "stab")]
        stab_plane: Option<String>,
        /// Stabilize the set as a whole instead of each member
        #[arg(long)]
        setwise: bool,
    },
    /// Apply a device expression to a direction sequence
    Invert {
        device: String,
        tokens: String,
        /// Scale used by transpositions
        #[arg(long)]
        scale: Option<String>,
        /// Also print the device's derivation and permutation
        #[arg(long)]
        explain: bool,
    },
    /// The four-limb normal-zone table
    Zones,
    /// Draw a scale's clock, optionally with a trace form
    Clock {
        #[arg(long)]
        scale: Option<String>,
        #[arg(long)]
        form: Option<String>,
        /// Also draw the form transformed by this device expression
        #[arg(long, requires = "form")]
        device: Option<String>,
        #[arg(long, value_enum, default_value = "ascii")]
        render: Format,
        #[arg(long, value_enum, value_delimiter = ',')]
        show: Vec<Show>,
        /// Coset family to draw with --show cosets: 4, 3 or 6
        #[arg(long, default_value_t = 4)]
        cosets: usize,
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Run the worked examples and report pass/fail
    Check,
    /// Evaluate a script file
    Run { script: PathBuf },
}

/// Failure of a command, mapped to an exit status.
enum Failure {
    Usage(String),
    Domain(String),
    Failed,
    /// The reader went away; stop quietly.
    ClosedPipe,
}

impl From<kinesphere::Error> for Failure {
    fn from(e: kinesphere::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<kinesphere::ParseError> for Failure {
    fn from(e: kinesphere::ParseError) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::ClosedPipe;
        }
        Failure::Domain(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

/// Runs one command line. `args[0]` is the program name.
pub fn execute<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };

    match run(cli, out, err) {
        Ok(()) => 0,
        Err(Failure::Usage(message)) => {
            let _ = writeln!(err, "error: {message}");
            1
        }
        Err(Failure::Failed) => 1,
        Err(Failure::ClosedPipe) => 0,
        Err(Failure::Domain(message)) => {
            let _ = writeln!(err, "{message}");
            2
        }
    }
}

fn load_library(config: Option<&PathBuf>, err: &mut dyn Write) -> Result<ScaleLibrary, Failure> {
    let Some(path) = config else {
        return Ok(ScaleLibrary::bundled());
    };
    let text = fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    let library =
        ScaleLibrary::from_json(&text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    for warning in library.warnings() {
        let _ = writeln!(err, "warning: {warning}");
    }
    Ok(library)
}

fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cli.command {
        Command::Info { solid, json } => info(&solid, json, out),
        Command::Orbits {
            solid,
            group,
            stab,
            stab_plane,
            setwise,
        } => orbits(
            &solid,
            group,
            stab.as_deref(),
            stab_plane.as_deref(),
            setwise,
            out,
        ),
        Command::Invert {
            device,
            tokens,
            scale,
            explain,
        } => {
            let library = load_library(cli.config.as_ref(), err)?;
            invert(&library, &device, &tokens, scale.as_deref(), explain, out, err)
        }
        Command::Zones => zones(out),
        Command::Clock {
            scale,
            form,
            device,
            render,
            show,
            cosets,
            output,
        } => {
            let library = load_library(cli.config.as_ref(), err)?;
            let spec = RenderSpec {
                format: render,
                show: if show.is_empty() {
                    RenderSpec::default().show
                } else {
                    show.into_iter().collect()
                },
                coset_step: cosets,
            };
            clock(
                &library,
                scale.as_deref(),
                form.as_deref(),
                device.as_deref(),
                &spec,
                output,
                out,
            )
        }
        Command::Check => {
            let report = check::run_all();
            report.write(out)?;
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::Failed)
            }
        }
        Command::Run { script } => {
            let library = load_library(cli.config.as_ref(), err)?;
            let text = fs::read_to_string(&script)
                .map_err(|e| Failure::Domain(format!("{}: {e}", script.display())))?;
            let bindings = Script::parse(&text).and_then(|s| s.run(&library))?;
            for binding in bindings {
                writeln!(out, "{binding}")?;
            }
            Ok(())
        }
    }
}

fn vertex_name(v: usize) -> String {
    format!("v{}", v + 1)
}

fn vertex_list(vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter().map(vertex_name).collect::<Vec<_>>().join(" ")
}

fn info(solid: &str, json: bool, out: &mut dyn Write) -> CmdResult {
    let solid: Solid = solid.parse()?;
    let p = solid.polyhedron();
    if json {
        writeln!(out, "{}", p.to_json())?;
        return Ok(());
    }
    writeln!(
        out,
        "{}: {} vertices, {} edges, edge length {:.6}",
        solid,
        p.vertex_count(),
        p.edges().len(),
        p.edge_length()
    )?;
    writeln!(
        out,
        "{:<8}{:<7}{:<22}{:<28}{:<10}neighbors",
        "vertex", "token", "direction", "coordinates", "opposite"
    )?;
    for v in p.vertices() {
        let coords = format!("({:6.3}, {:6.3}, {:6.3})", v.coords[0], v.coords[1], v.coords[2]);
        writeln!(
            out,
            "{:<8}{:<7}{:<22}{:<28}{:<10}{}",
            vertex_name(v.index),
            v.direction.token(),
            v.direction.description(),
            coords,
            vertex_name(p.antipode(v.index)?),
            vertex_list(p.neighbors(v.index)?.iter().copied())
        )?;
    }
    writeln!(
        out,
        "rotation group order {}, full symmetry group order {}",
        p.rotation_group().order(),
        p.full_symmetry_group().order()
    )?;
    Ok(())
}

/// Accepts `v5`, `5` or a direction token of the given solid.
fn parse_vertex(p: &Polyhedron, text: &str) -> Result<usize, Failure> {
    let text = text.trim();
    let number = text.strip_prefix('v').unwrap_or(text);
    if let Ok(n) = number.parse::<usize>() {
        if (1..=p.vertex_count()).contains(&n) {
            return Ok(n - 1);
        }
        return Err(Failure::Domain(format!(
            "{text} is not a vertex of the {} (v1..v{})",
            p.kind(),
            p.vertex_count()
        )));
    }
    let d = Direction::from_token(text)?;
    if d.solid() != p.kind() {
        return Err(Failure::Domain(format!(
            "{text} is a direction of the {}, not the {}",
            d.solid(),
            p.kind()
        )));
    }
    Ok(d.vertex())
}

pub(crate) fn format_partition(partition: &OrbitPartition) -> (String, String) {
    let orbits: String = partition
        .nontrivial_blocks()
        .map(|b| format!("({})", vertex_list(b.iter().copied())))
        .collect();
    let orbits = if orbits.is_empty() {
        "none".to_string()
    } else {
        orbits
    };
    let fixed = partition.fixed_points();
    let fixed = if fixed.is_empty() {
        "none".to_string()
    } else {
        vertex_list(fixed)
    };
    (orbits, fixed)
}

fn orbits(
    solid: &str,
    flavor: GroupFlavor,
    stab: Option<&str>,
    plane: Option<&str>,
    setwise: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let solid: Solid = solid.parse()?;
    let p = solid.polyhedron();
    let (group, group_name): (&PermGroup, &str) = match flavor {
        GroupFlavor::Rot => (p.rotation_group(), "rotation group"),
        GroupFlavor::Full => (p.full_symmetry_group(), "full symmetry group"),
    };
    writeln!(
        out,
        "group: {group_name} of the {solid} (order {})",
        group.order()
    )?;

    let target: Option<(BTreeSet<usize>, String)> = match (stab, plane) {
        (Some(list), _) => {
            let set: BTreeSet<usize> = list
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| parse_vertex(p, s))
                .collect::<Result<_, _>>()?;
            if set.is_empty() {
                return Err(Failure::Usage("--stab needs at least one vertex".into()));
            }
            let label = format!("{{{}}}", vertex_list(set.iter().copied()));
            Some((set, label))
        }
        (None, Some(plane)) => {
            if solid != Solid::Icosahedron {
                return Err(Failure::Domain(format!(
                    "body planes are defined on the icosahedron, not the {solid}"
                )));
            }
            let plane: BodyPlane = plane.parse()?;
            let set: BTreeSet<usize> = plane.fixed_vertices().into_iter().collect();
            let label = format!("{plane} plane {{{}}}", vertex_list(set.iter().copied()));
            Some((set, label))
        }
        (None, None) => None,
    };

    let acting = match target {
        None => group.clone(),
        Some((set, label)) => {
            let (subgroup, how) = if setwise {
                (group.setwise_stabilizer(set)?, "setwise")
            } else if set.len() == 1 {
                (
                    group.point_stabilizer(*set.first().expect("nonempty"))?,
                    "pointwise",
                )
            } else {
                (group.pointwise_set_stabilizer(set)?, "pointwise")
            };
            writeln!(out, "stabilizer: {how}, {label} (order {})", subgroup.order())?;
            if subgroup.order() <= 12 {
                let elements: Vec<String> = subgroup.elements().iter().map(|e| e.to_string()).collect();
                writeln!(out, "elements: {}", elements.join(", "))?;
            }
            subgroup
        }
    };

    let (orbits, fixed) = format_partition(&acting.orbit_partition());
    writeln!(out, "orbits: {orbits}")?;
    writeln!(out, "fixed: {fixed}")?;
    Ok(())
}

fn invert(
    library: &ScaleLibrary,
    device: &str,
    tokens: &str,
    scale: Option<&str>,
    explain: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let expr = DeviceExpr::parse(device)?;
    let sequence = parse_sequence(tokens)?;
    let scale = match scale {
        Some(name) => library.scale(name)?,
        None => library
            .default_scale()
            .ok_or_else(|| Failure::Domain("no scale is configured".into()))?,
    };
    let device = expr.build(scale)?;
    let result = device.apply_sequence(&sequence)?;
    writeln!(out, "{result}")?;
    if explain {
        writeln!(out, "device: {}", expr)?;
        writeln!(out, "permutation: {}", device.perm())?;
    }
    if !device.is_identity() {
        for step in sequence.steps() {
            if device.apply(*step)? == *step {
                writeln!(
                    err,
                    "note: {} is fixed by {expr} and stays in place",
                    step.token()
                )?;
            }
        }
    }
    Ok(())
}

fn zones(out: &mut dyn Write) -> CmdResult {
    let icosahedron = Solid::Icosahedron.polyhedron();
    writeln!(
        out,
        "{:<11}{:<10}{:<22}vertices",
        "Limb", "Standard", "Normal range"
    )?;
    for limb in Limb::ALL {
        let zone = normal_zone(icosahedron, limb)?;
        let range: Vec<&str> = zone.range.iter().map(|d| d.token()).collect();
        writeln!(
            out,
            "{:<11}{:<10}{:<22}{{{}}} / {{{}}}",
            limb.title(),
            zone.standard.token(),
            range.join(" "),
            vertex_name(zone.standard.vertex()),
            vertex_list(zone.range.iter().map(|d| d.vertex()))
        )?;
    }
    Ok(())
}

fn clock(
    library: &ScaleLibrary,
    scale: Option<&str>,
    form: Option<&str>,
    device: Option<&str>,
    spec: &RenderSpec,
    output: Option<PathBuf>,
    out: &mut dyn Write,
) -> CmdResult {
    let mut forms: Vec<TraceForm> = Vec::new();
    let mut scale_name = scale.map(str::to_string);
    if let Some(name) = form {
        let stored = library.trace_form(name)?;
        match &scale_name {
            Some(s) if s != &stored.scale => {
                return Err(Failure::Domain(format!(
                    "trace form `{name}` is drawn on scale `{}`, not `{s}`",
                    stored.scale
                )))
            }
            _ => scale_name = Some(stored.scale.clone()),
        }
        forms.push(stored.form.clone());
    }
    let scale = match &scale_name {
        Some(name) => library.scale(name)?,
        None => library
            .default_scale()
            .ok_or_else(|| Failure::Domain("no scale is configured".into()))?,
    };
    if let Some(expr) = device {
        let built = DeviceExpr::parse(expr)?.build(scale)?;
        let transformed = apply_device_on_clock(scale, &built, &forms[0])?;
        forms.push(transformed.renamed(format!("{}:{expr}", forms[0].name())));
    }

    let text = render::render(scale, &forms, spec);
    match output {
        Some(path) => {
            fs::write(&path, text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Runs a command line and captures stdout, stderr and the exit status.
pub fn capture<I, S>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = execute(args, &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}
