use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "gitkit",
    version,
    about = "Torus GIT, Horn inequalities, puzzles and localization from the command line"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// RNG seed for sampling commands; GITKIT_SEED takes precedence.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Worker threads for puzzle enumeration and series expansion.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weyl group of GL(r).
    Lie {
        #[command(subcommand)]
        op: LieOp,
    },
    /// Characters, tensor products, invariants and Borel–Weil–Bott.
    Char {
        #[command(subcommand)]
        op: CharOp,
    },
    /// Knutson–Tao puzzles and Littlewood–Richardson numbers.
    Puzzles {
        #[command(subcommand)]
        op: PuzzlesOp,
    },
    /// Horn inequalities for sums of Hermitian matrices.
    Horn {
        #[command(subcommand)]
        op: HornOp,
    },
    /// Torus actions on projective space.
    Stability {
        #[command(subcommand)]
        op: StabilityOp,
    },
    /// Rational polytopes.
    Polytope {
        #[command(subcommand)]
        op: PolytopeOp,
    },
    /// Fixed-point formulas as cone series.
    Localize {
        #[command(subcommand)]
        op: LocalizeOp,
    },
    /// Replays the pinned worked examples.
    PaperExamples {
        /// Add wall-clock time per example (makes output non-deterministic).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum LieOp {
    /// W-orbit of a weight.
    Orbit {
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// (r−1, …, 1, 0).
    Rho {
        #[arg(long)]
        r: usize,
    },
    /// Sorting element and dominant representative.
    Dominantize {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// All permutations with length and sign.
    Group {
        #[arg(long)]
        r: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CharOp {
    /// Weyl character as a Laurent polynomial.
    Weyl {
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Dimension of V_λ.
    Dim {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// SU(2) character of spin d/2; give --d or --spin.
    Su2 {
        #[arg(long, conflicts_with = "spin")]
        d: Option<i64>,
        #[arg(long)]
        spin: Option<String>,
    },
    /// Multiplicities in V_λ ⊗ V_μ.
    Tensor {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Invariant dimension of a tensor product.
    Invariants {
        /// Highest weights separated by ';'.
        #[arg(long, allow_hyphen_values = true, required_unless_present = "spins")]
        lambdas: Option<String>,
        #[arg(long, value_enum, default_value_t = GroupArg::Sl)]
        group: GroupArg,
        /// SU(2) spins such as 1/2,1/2 instead of --lambdas.
        #[arg(long, conflicts_with = "lambdas")]
        spins: Option<String>,
    },
    /// Cohomology of the line bundle L_λ on the flag variety.
    Bwb {
        #[arg(long, allow_hyphen_values = true, required_unless_present = "su2")]
        lambda: Option<String>,
        /// Degree n of O(n) on P¹ instead of --lambda.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "lambda")]
        su2: Option<i64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    Gl,
    Sl,
}

#[derive(Debug, Subcommand)]
pub enum PuzzlesOp {
    /// Number of puzzles with the given boundary.
    Count {
        #[arg(long)]
        r: usize,
        #[arg(long = "I", alias = "i", default_value = "")]
        i: String,
        #[arg(long = "J", alias = "j", default_value = "")]
        j: String,
        #[arg(long = "K", alias = "k", default_value = "")]
        k: String,
        /// Dump each filling as an edge-label map.
        #[arg(long)]
        list: bool,
    },
    /// Littlewood–Richardson coefficient of partitions in an s × (r−s) box.
    Lr {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value = "")]
        lambda: String,
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long, default_value = "")]
        nu: String,
    },
    /// Associativity of the structure constants.
    Assoc {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        /// Random tuples instead of the exhaustive check.
        #[arg(long)]
        trials: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum HornOp {
    /// Inequality system for rank r.
    Generate {
        #[arg(long)]
        r: usize,
        /// Keep only triples with coefficient exactly 1.
        #[arg(long)]
        irredundant: bool,
    },
    /// Whether (a, b, c) are spectra of A, B, A + B.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        irredundant: bool,
    },
    /// Random Hermitian pairs against the system.
    Sample {
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Existence of a closed polygon with the given side lengths.
    Polygon {
        #[arg(long)]
        lengths: String,
    },
    /// Semistability of a weighted point configuration on P¹.
    Sl2 {
        #[arg(long)]
        masses: String,
        #[arg(long)]
        total: Option<String>,
    },
}

/// A point given as JSON inline or as a path.
#[derive(Debug, Args)]
pub struct PointArg {
    #[arg(long, alias = "in")]
    pub point: String,
}

#[derive(Debug, Subcommand)]
pub enum StabilityOp {
    /// Moment map image of the point.
    Moment {
        #[command(flatten)]
        point: PointArg,
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<String>,
    },
    /// Convex hull of the support weights.
    Polytope {
        #[command(flatten)]
        point: PointArg,
    },
    /// Stable, polystable, semistable or unstable.
    Classify {
        #[command(flatten)]
        point: PointArg,
    },
    /// Hilbert–Mumford slope along λ.
    Slope {
        #[command(flatten)]
        point: PointArg,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Most destabilizing one-parameter subgroup.
    Destabilize {
        #[command(flatten)]
        point: PointArg,
    },
    /// Kempf–Ness function and gradient at ξ.
    KempfNess {
        #[command(flatten)]
        point: PointArg,
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
    },
    /// Gradient descent on the Kempf–Ness function.
    Flow {
        #[command(flatten)]
        point: PointArg,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value_t = 100_000)]
        max_iter: usize,
        #[arg(long, default_value_t = 50.0)]
        escape_radius: f64,
    },
    /// Limit of the point along λ.
    Graded {
        #[command(flatten)]
        point: PointArg,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Cone of subgroups whose limits are polystable.
    JhCone {
        #[command(flatten)]
        point: PointArg,
    },
    /// Critical types of a weight set.
    Types {
        /// JSON list of weights, a path, or inline "a,b;c,d".
        #[arg(long, alias = "in", allow_hyphen_values = true)]
        weights: String,
    },
    /// Segre product of two points.
    Product {
        #[command(flatten)]
        point: PointArg,
        #[arg(long)]
        other: String,
    },
}

/// A polytope as JSON, a path, or inline points "a,b;c,d".
#[derive(Debug, Args)]
pub struct PolytopeArg {
    #[arg(long = "in", alias = "polytope", allow_hyphen_values = true)]
    pub input: String,
}

#[derive(Debug, Subcommand)]
pub enum PolytopeOp {
    /// Vertices, facets and equations of a convex hull.
    Hull {
        #[command(flatten)]
        polytope: PolytopeArg,
    },
    /// Hull of the Weyl orbit of λ.
    Kostant {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Lattice points, optionally in a coset shift + step·Z^r.
    Lattice {
        #[command(flatten)]
        polytope: PolytopeArg,
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<String>,
        #[arg(long, default_value_t = 1)]
        step: i64,
    },
    /// Smoothness of every vertex cone.
    Delzant {
        #[command(flatten)]
        polytope: PolytopeArg,
    },
    /// Intersection with ⟨x, normal⟩ ≥ level.
    Cut {
        #[command(flatten)]
        polytope: PolytopeArg,
        #[arg(long, allow_hyphen_values = true)]
        normal: String,
        #[arg(long, allow_hyphen_values = true)]
        level: String,
    },
    /// Outward normal cone of every face.
    Fan {
        #[command(flatten)]
        polytope: PolytopeArg,
    },
    /// Tangent-cone inclusion–exclusion at random points.
    BrianchonGram {
        #[command(flatten)]
        polytope: PolytopeArg,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum LocalizeOp {
    /// Vertex cone series of a Delzant polytope.
    Toric {
        #[arg(long, alias = "in", allow_hyphen_values = true)]
        polytope: String,
        /// Evaluate the rational function at this point.
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<String>,
    },
    /// Expand a series in a box; the default box covers the polytope.
    Expand {
        /// Series JSON, or a polytope whose vertex series is expanded.
        #[arg(long, alias = "in", allow_hyphen_values = true)]
        series: String,
        #[arg(long, allow_hyphen_values = true, requires = "hi")]
        lo: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "lo")]
        hi: Option<String>,
    },
    /// Closed-form series of O(d) on P².
    P2 {
        #[arg(long)]
        d: i64,
    },
    /// Series of O(k) on P¹.
    P1Bundle {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Stable part of the P¹ lattice equals the full lattice minus the unstable strata.
    P1 {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        half_width: Option<i64>,
    },
    /// Blow-up of P² at a fixed point.
    Blowup {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        e: i64,
        /// Also evaluate the four-term formula at (g1, g2).
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Weyl character through the flag-variety fixed points.
    Weyl {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
}
