use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ncoons::analysis::{contours, curvature_map, dirichlet_energy, harmonic_fill_with_stats};
use ncoons::io::{format_sig9, write_obj, write_ply_scalar, LoopDocument};
use ncoons::{mesh_patch, BoundaryLoop, Patch, Point2, Point3};

/// Multi-sided C0 Coons patches from boundary loop documents.
#[derive(Debug, Parser)]
#[command(name = "ncoons", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a loop and report closure residuals and extent.
    Check {
        /// Loop document (JSON).
        input: PathBuf,
    },
    /// Evaluate the patch at one point.
    Eval {
        input: PathBuf,
        /// Boundary side, 1-based; use together with --t.
        #[arg(long, requires = "t", conflicts_with = "uv")]
        side: Option<usize>,
        /// Parameter along --side, in [0, 1].
        #[arg(long, requires = "side")]
        t: Option<f64>,
        /// Domain point "x,y" (regular polygon of circumradius 1).
        #[arg(long, value_parser = parse_uv, allow_hyphen_values = true)]
        uv: Option<(f64, f64)>,
    },
    /// Tessellate the patch and write an OBJ mesh.
    Mesh(MeshArgs),
    /// Harmonic fill on the same tessellation (OBJ) and an energy comparison.
    Harmonic(MeshArgs),
    /// Mean curvature map as an ASCII PLY with a `quality` property.
    Curvature(MeshArgs),
    /// Patch mesh plus planar contour polylines, as OBJ.
    Contours {
        #[command(flatten)]
        mesh: MeshArgs,
        #[arg(long, value_enum, default_value_t = Axis::Z)]
        axis: Axis,
        /// Number of contour levels.
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

#[derive(Debug, Args)]
struct MeshArgs {
    input: PathBuf,
    /// Subdivisions per side.
    #[arg(short, default_value_t = 30)]
    m: usize,
    /// Output file.
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    fn vector(self) -> Point3 {
        match self {
            Axis::X => Point3::new(1.0, 0.0, 0.0),
            Axis::Y => Point3::new(0.0, 1.0, 0.0),
            Axis::Z => Point3::new(0.0, 0.0, 1.0),
        }
    }
}

fn parse_uv(s: &str) -> Result<(f64, f64), String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected x,y but got '{s}'"))?;
    let x = x.trim().parse().map_err(|_| format!("bad x in '{s}'"))?;
    let y = y.trim().parse().map_err(|_| format!("bad y in '{s}'"))?;
    Ok((x, y))
}

#[derive(Debug)]
enum Failure {
    Lib(ncoons::Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
}

impl From<ncoons::Error> for Failure {
    fn from(e: ncoons::Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn diagnostic(&self) -> String {
        match self {
            Failure::Lib(e) => format!("error[{}]: {e}", e.class()),
            Failure::Io(path, e) => format!("error[io]: {}: {e}", path.display()),
            Failure::Usage(msg) => format!("error[usage]: {msg}"),
        }
    }
}

fn read_document(path: &Path) -> Result<LoopDocument, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))?;
    Ok(LoopDocument::parse(&text)?)
}

fn read_loop(path: &Path) -> Result<BoundaryLoop, Failure> {
    Ok(read_document(path)?.into_loop()?)
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn fmt_point(p: Point3) -> String {
    format!(
        "{} {} {}",
        format_sig9(p.x),
        format_sig9(p.y),
        format_sig9(p.z)
    )
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Check { input } => {
            let doc = read_document(&input)?;
            doc.validate()?;
            let residuals = BoundaryLoop::closure_residuals(&doc.curves()?);
            let boundary = doc.into_loop()?;
            let bbox = boundary.bounding_box();
            println!("n={}", boundary.len());
            let list: Vec<String> = residuals.iter().map(|&r| format_sig9(r)).collect();
            println!("closure residuals: {}", list.join(" "));
            println!("weld tolerance: {}", format_sig9(boundary.weld_tolerance()));
            println!(
                "bounding box: min {} max {} diagonal {}",
                fmt_point(bbox.min),
                fmt_point(bbox.max),
                format_sig9(bbox.diagonal())
            );
        }
        Command::Eval { input, side, t, uv } => {
            let patch = Patch::new(read_loop(&input)?)?;
            let point = match (side, t, uv) {
                (Some(side), Some(t), None) => {
                    if side == 0 || side > patch.sides() {
                        return Err(Failure::Usage(format!(
                            "--side must be in 1..={}",
                            patch.sides()
                        )));
                    }
                    patch.eval_boundary(side - 1, t)?
                }
                (None, None, Some((x, y))) => patch.eval(Point2::new(x, y))?,
                _ => return Err(Failure::Usage("give either --side and --t, or --uv".into())),
            };
            println!("{}", fmt_point(point));
        }
        Command::Mesh(args) => {
            let patch = Patch::new(read_loop(&args.input)?)?;
            let mesh = mesh_patch(&patch, args.m)?;
            write_file(&args.output, &write_obj(&mesh, None))?;
        }
        Command::Harmonic(args) => {
            let boundary = read_loop(&args.input)?;
            let (harmonic, stats) = harmonic_fill_with_stats(&boundary, args.m)?;
            let patch_mesh = mesh_patch(&Patch::new(boundary)?, args.m)?;
            write_file(&args.output, &write_obj(&harmonic, None))?;
            let eh = dirichlet_energy(&harmonic);
            let ep = dirichlet_energy(&patch_mesh);
            println!("solver iterations: {}", stats.iterations);
            println!("solver residual: {}", format_sig9(stats.residual));
            println!("dirichlet energy (harmonic): {}", format_sig9(eh));
            println!("dirichlet energy (patch): {}", format_sig9(ep));
            println!("harmonic <= patch: {}", eh <= ep);
        }
        Command::Curvature(args) => {
            let patch = Patch::new(read_loop(&args.input)?)?;
            let mesh = curvature_map(&patch, args.m)?;
            write_file(&args.output, &write_ply_scalar(&mesh)?)?;
        }
        Command::Contours { mesh, axis, count } => {
            let patch = Patch::new(read_loop(&mesh.input)?)?;
            let tri = mesh_patch(&patch, mesh.m)?;
            let set = contours(&tri, axis.vector(), count)?;
            write_file(&mesh.output, &write_obj(&tri, Some(&set)))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            // clap spreads one message over several lines before the usage block
            let rendered = e.to_string();
            let message: Vec<&str> = rendered
                .lines()
                .map(str::trim)
                .take_while(|l| !l.starts_with("Usage:") && !l.starts_with("For more information"))
                .filter(|l| !l.is_empty())
                .collect();
            let message = message.join(" ");
            let message = message.strip_prefix("error: ").unwrap_or(&message);
            eprintln!("error[usage]: {message}");
            return ExitCode::FAILURE;
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", f.diagnostic());
            ExitCode::FAILURE
        }
    }
}
