use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use lattice_pick::commands;
use lattice_pick::svg::SvgOptions;

#[derive(Parser)]
#[command(name = "lattice-pick", version, about = "Exact Pick's theorem checks and certificates for lattice polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a polygon file and describe its shape
    Check { file: PathBuf },
    /// Count interior and boundary lattice points and compare with the area
    Pick { file: PathBuf },
    /// Decompose into elementary triangles and emit a certificate
    Decompose {
        file: PathBuf,
        #[arg(short, long, value_name = "CERT")]
        out: Option<PathBuf>,
    },
    /// Check a certificate produced by `decompose`
    Certify { cert: PathBuf },
    /// Generate a random simple lattice polygon
    Gen {
        #[arg(short = 'n', long = "vertices")]
        vertices: usize,
        #[arg(short = 'b', long = "bound")]
        bound: u64,
        #[arg(short = 's', long = "seed")]
        seed: u64,
        #[arg(short, long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Draw a polygon as SVG
    Svg {
        file: PathBuf,
        #[arg(long)]
        show_hull: bool,
        #[arg(long)]
        show_pockets: bool,
        #[arg(long)]
        show_decomposition: bool,
        #[arg(long)]
        show_lattice: bool,
        #[arg(short, long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let out = match &cli.command {
        Command::Check { file } => commands::check(file),
        Command::Pick { file } => commands::pick(file),
        Command::Decompose { file, out } => commands::decompose_cmd(file, out.as_deref()),
        Command::Certify { cert } => commands::certify(cert),
        Command::Gen { vertices, bound, seed, out } => commands::gen(*vertices, *bound, *seed, out.as_deref()),
        Command::Svg { file, show_hull, show_pockets, show_decomposition, show_lattice, out } => {
            let opts = SvgOptions {
                hull: *show_hull,
                pockets: *show_pockets,
                decomposition: *show_decomposition,
                lattice: *show_lattice,
            };
            commands::svg(file, opts, out.as_deref())
        }
    };
    // Broken pipes are not worth a panic.
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
