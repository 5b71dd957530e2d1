//! Command-line grammar.

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "qtau", version, about = "Weyl group actions on tau functions, Verma singular vectors and related checks")]
pub struct Cli {
    /// Report format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    pub out: OutFormat,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Cartan matrix input.
    #[command(subcommand)]
    Gcm(GcmCmd),
    /// Tau functions.
    #[command(subcommand)]
    Tau(TauCmd),
    /// Identity checks.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Verma module computations.
    #[command(subcommand)]
    Verma(VermaCmd),
    /// Okamoto polynomials Q_0..Q_m.
    Okamoto(OkamotoArgs),
}

#[derive(Subcommand, Debug)]
pub enum GcmCmd {
    /// Check the matrix axioms and print the symmetrizer.
    Validate(GcmArg),
}

#[derive(Subcommand, Debug)]
pub enum TauCmd {
    /// tau_(w(mu)) for a reduced word and dominant weight.
    Compute(TauComputeArgs),
    /// Regularity of tau functions over a word range.
    CheckRegular(CheckRegularArgs),
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Braid relations on generators, parameters and tau variables.
    Braid(BraidArgs),
    /// Rank-2 Verma identities at integer parameters.
    VermaIdentity(VermaIdentityArgs),
    /// q-Hirota-Miwa lemma and its translates on the affine A lattice.
    Hirota(HirotaArgs),
    /// Tau functions agree across reduced words of the same element.
    ReducedWord(ReducedWordArgs),
}

#[derive(Subcommand, Debug)]
pub enum VermaCmd {
    /// Right division modulo the Serre ideal.
    Divide(DivideArgs),
    /// Compare sigma(phi) images with F(w,lambda) factors.
    Crosscheck(CrosscheckArgs),
}

#[derive(Args, Debug, Clone)]
pub struct GcmArg {
    /// JSON file ({"labels", "cartan", "symmetrizer"}) or a type name such as A3, B2, A2^(1).
    #[arg(long)]
    pub gcm: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct RealArgs {
    #[command(flatten)]
    pub gcm: GcmArg,
    /// cc, qc, classical, or weyl:<preset>.
    #[arg(long, default_value = "cc")]
    pub realization: String,
    /// Commutator matrix rows separated by ';', entries by ','.
    #[arg(long)]
    pub commutators: Option<String>,
}

#[derive(Args, Debug)]
pub struct TauComputeArgs {
    #[command(flatten)]
    pub real: RealArgs,
    /// Labels in application order, e.g. 1,2,3,1,2,1; empty for the identity.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub word: String,
    /// L1, rho, 0, 1,0,2 or L1+2*L3.
    #[arg(long)]
    pub weight: String,
}

#[derive(Args, Debug)]
pub struct CheckRegularArgs {
    #[command(flatten)]
    pub real: RealArgs,
    #[arg(long)]
    pub word: Option<String>,
    #[arg(long)]
    pub weight: Option<String>,
    /// Longest word length when --word is absent.
    #[arg(long, default_value_t = 3)]
    pub max_len: usize,
}

#[derive(Args, Debug)]
pub struct BraidArgs {
    #[command(flatten)]
    pub real: RealArgs,
    /// Two labels, e.g. 1,2; all pairs with a braid relation when absent.
    #[arg(long)]
    pub pair: Option<String>,
}

#[derive(Args, Debug)]
pub struct VermaIdentityArgs {
    #[command(flatten)]
    pub real: RealArgs,
    #[arg(long)]
    pub pair: Option<String>,
    /// Parameters range over [-bound, bound].
    #[arg(long, default_value_t = 3)]
    pub bound: i64,
}

#[derive(Args, Debug)]
pub struct HirotaArgs {
    /// Rank of the affine A lattice.
    #[arg(long)]
    pub n: usize,
    /// A single index; all of 1..n when absent.
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
    /// Shift vector with n entries; repeatable. Defaults to 0, e1 and e1+e2.
    #[arg(long, allow_hyphen_values = true)]
    pub shift: Vec<String>,
}

#[derive(Args, Debug)]
pub struct ReducedWordArgs {
    #[command(flatten)]
    pub real: RealArgs,
    #[arg(long, default_value_t = 4)]
    pub max_len: usize,
    #[arg(long)]
    pub weight: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Km,
    Q,
}

#[derive(Args, Debug)]
pub struct DivideArgs {
    #[command(flatten)]
    pub gcm: GcmArg,
    #[arg(long, value_enum, default_value_t = CaseArg::Km)]
    pub case: CaseArg,
    /// Divide F(w,lambda+mu) by F(w,lambda).
    #[arg(long)]
    pub word: Option<String>,
    #[arg(long, default_value = "0")]
    pub lambda: String,
    #[arg(long, default_value = "0")]
    pub mu: String,
    /// Dividend as an expression in the f<label>.
    #[arg(long, allow_hyphen_values = true)]
    pub big: Option<String>,
    /// Right divisor as an expression in the f<label>.
    #[arg(long, allow_hyphen_values = true)]
    pub small: Option<String>,
}

#[derive(Args, Debug)]
pub struct CrosscheckArgs {
    #[command(flatten)]
    pub real: RealArgs,
    #[arg(long)]
    pub word: String,
    #[arg(long, default_value = "0")]
    pub lambda: String,
    #[arg(long, default_value = "0")]
    pub mu: String,
}

#[derive(Args, Debug)]
pub struct OkamotoArgs {
    #[arg(long)]
    pub m: usize,
}
