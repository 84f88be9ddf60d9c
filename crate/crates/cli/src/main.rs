//! `eqstream`: keystream generation, mod-36 encryption, analysis, calibration
//! and a loopback session demo.

mod config;

use std::io::{self, Read, Write};
use std::net::{Shutdown, TcpListener, TcpStream};
use std::path::PathBuf;
use std::process::ExitCode;
use std::thread;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eqstream::analysis::analyze;
use eqstream::calibration::{calibrate, Fixture};
use eqstream::codec36::{decrypt, encrypt, AlphaText};
use eqstream::keystream::{Generator, GeneratorParams, Keystream, Mode, RelationshipTable};
use eqstream::session::{
    run_initiator, run_responder, HelloPayload, ResponderOptions, Session, Transcript,
};
use thiserror::Error;

use config::{parse_list, CliConfig, ConfigError, ModeName};

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
        }
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn data<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Data(e.to_string())
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(
    name = "eqstream",
    version,
    about = "Feedback keystream generator with a mod-36 cipher"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the keystream.
    Keystream(KeystreamArgs),
    /// Encrypt alphabet-36 text (digits and letters).
    Encrypt(CipherArgs),
    /// Decrypt alphabet-36 text.
    Decrypt(CipherArgs),
    /// Frequency, chi-square, serial correlation, avalanche and timing.
    Analyze(AnalyzeArgs),
    /// Sweep formula variants against the published output sequence.
    Calibrate(CalibrateArgs),
    /// Run a HELLO/ACK/DATA exchange between two threads over TCP loopback.
    SessionDemo(SessionArgs),
}

/// A whole list in one flag value; clap would otherwise treat `Vec` as
/// repeated values.
#[derive(Debug, Clone, PartialEq, Eq)]
struct ListArg(Vec<u32>);

fn parse_list_arg(s: &str) -> std::result::Result<ListArg, String> {
    parse_list(s).map(ListArg)
}

#[derive(Args, Debug, Clone, Default)]
struct ParamArgs {
    /// key=value file; flags override its settings
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Pre-shared key r (required here or in the config file)
    #[arg(long, value_name = "R")]
    key: Option<u32>,
    /// Time stamps, e.g. 1,2,3 or 1..6 [default: 1..6]
    #[arg(long, value_parser = parse_list_arg, value_name = "LIST")]
    timestamps: Option<ListArg>,
    /// Nonce elements, e.g. 2..21 [default: 2..21]
    #[arg(long, value_parser = parse_list_arg, value_name = "LIST")]
    nonce: Option<ListArg>,
    /// Initial value seed [default: 4]
    #[arg(long)]
    seed: Option<u32>,
    /// canonical or literal (fixed loops, reads --u/--u1) [default: canonical]
    #[arg(long, value_parser = |s: &str| s.parse::<ModeName>())]
    mode: Option<ModeName>,
    /// Literal mode numerator [default: 1]
    #[arg(long, allow_hyphen_values = true)]
    u: Option<i32>,
    /// Literal mode divisor [default: 1]
    #[arg(long, allow_hyphen_values = true)]
    u1: Option<i32>,
    /// Output modulus [default: 35]
    #[arg(long)]
    modulus: Option<u32>,
}

impl ParamArgs {
    fn config(&self) -> Result<CliConfig> {
        let file = match &self.config {
            Some(path) => CliConfig::load(path)?,
            None => CliConfig::default(),
        };
        let flags = CliConfig {
            key: self.key,
            timestamps: self.timestamps.clone().map(|l| l.0),
            nonce: self.nonce.clone().map(|l| l.0),
            seed: self.seed,
            mode: self.mode,
            u: self.u,
            u1: self.u1,
            modulus: self.modulus,
        };
        Ok(file.merge(flags))
    }

    fn params(&self) -> Result<GeneratorParams> {
        Ok(self.config()?.to_params()?)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum StreamFormat {
    Text,
    Binary,
}

#[derive(Args, Debug)]
struct KeystreamArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Number of values; the stream repeats from the start past its end
    #[arg(long)]
    length: Option<usize>,
    #[arg(long, value_enum, default_value_t = StreamFormat::Text)]
    format: StreamFormat,
    /// Relationship table file (lo hi t_delta t_w u u_delta per line)
    #[arg(long, value_name = "FILE")]
    table: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CipherArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Use these subkey values instead of deriving them
    #[arg(
        long,
        value_name = "LIST",
        value_delimiter = ',',
        allow_hyphen_values = true
    )]
    subkey: Option<Vec<i64>>,
    /// Print symbol values instead of text
    #[arg(long)]
    values: bool,
    /// Input text; read from standard input when omitted
    text: Option<String>,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Serial-correlation lags
    #[arg(long, value_delimiter = ',', default_value = "1")]
    lag: Vec<usize>,
    /// Nonce stretch factors for the timing measurement, e.g. 1,2,4
    #[arg(long, value_delimiter = ',')]
    grid: Vec<usize>,
    /// Also write the key=value report to this file
    #[arg(long, value_name = "FILE")]
    kv_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CalibrateArgs {
    /// Published sequence to compare against [default: built-in copy]
    #[arg(long, value_name = "FILE")]
    fixture: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SessionArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Message to send; repeatable
    #[arg(long, default_value = "asks")]
    message: Vec<String>,
    /// Make the responder acknowledge a corrupted nonce
    #[arg(long)]
    corrupt_nonce: bool,
}

fn cmd_keystream(args: &KeystreamArgs, out: &mut dyn Write) -> Result<()> {
    let params = args.params.params()?;
    let table = match &args.table {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read table {}: {e}", path.display())))?
            .parse::<RelationshipTable>()
            .map_err(data)?,
        None => RelationshipTable::default(),
    };
    let generator = Generator::with_table(params, table).map_err(data)?;
    let ks = match args.length {
        Some(n) => generator.derive_subkey(n),
        None => generator.generate(),
    }
    .map_err(data)?;
    match args.format {
        StreamFormat::Text => writeln!(out, "{}", ks.to_text()),
        StreamFormat::Binary => out.write_all(&ks.to_bytes().map_err(data)?),
    }
    .map_err(data)
}

fn read_input(text: &Option<String>) -> Result<String> {
    match text {
        Some(t) => Ok(t.clone()),
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf).map_err(data)?;
            Ok(buf.trim_end_matches(['\n', '\r']).to_string())
        }
    }
}

fn cmd_cipher(args: &CipherArgs, decrypting: bool, out: &mut dyn Write) -> Result<()> {
    let input: AlphaText = read_input(&args.text)?.parse().map_err(data)?;
    let subkey = match &args.subkey {
        Some(values) => Keystream::new(values.clone()),
        None => {
            let params = args.params.params()?;
            Generator::new(params)
                .and_then(|g| g.derive_subkey(input.len()))
                .map_err(data)?
        }
    };
    let result = if decrypting {
        decrypt(&input, &subkey)
    } else {
        encrypt(&input, &subkey)
    }
    .map_err(data)?;
    let rendered = if args.values {
        result.values_text()
    } else {
        result.to_string()
    };
    writeln!(out, "{rendered}").map_err(data)
}

fn cmd_analyze(args: &AnalyzeArgs, out: &mut dyn Write) -> Result<()> {
    let params = args.params.params()?;
    if !matches!(params.mode, Mode::Canonical) {
        return Err(CliError::Usage(
            "analyze runs on the canonical stream only".into(),
        ));
    }
    if args.grid.contains(&0) {
        return Err(CliError::Usage("grid factors must be positive".into()));
    }
    let report = analyze(&params, &args.lag, &args.grid).map_err(data)?;
    let kv = report.to_key_values();
    if let Some(path) = &args.kv_file {
        std::fs::write(path, &kv)
            .map_err(|e| CliError::Data(format!("cannot write {}: {e}", path.display())))?;
    }
    write!(out, "{}\n{kv}", report.to_text()).map_err(data)
}

fn cmd_calibrate(args: &CalibrateArgs, out: &mut dyn Write) -> Result<()> {
    let fixture = match &args.fixture {
        Some(path) => Fixture::load(path).map_err(data)?,
        None => Fixture::builtin(),
    };
    write!(out, "{}", calibrate(&fixture).render()).map_err(data)
}

fn cmd_session_demo(args: &SessionArgs, out: &mut dyn Write) -> Result<()> {
    let params = args.params.params()?;
    if !matches!(params.mode, Mode::Canonical) {
        return Err(CliError::Usage(
            "sessions use the canonical stream only".into(),
        ));
    }
    params.validate().map_err(data)?;
    let hello = HelloPayload::from_params(&params).map_err(data)?;
    let key = params.key;

    let listener = TcpListener::bind("127.0.0.1:0").map_err(data)?;
    let addr = listener.local_addr().map_err(data)?;
    let opts = ResponderOptions {
        corrupt_ack: args.corrupt_nonce,
        echo: true,
    };
    let responder = thread::spawn(move || {
        let mut log = Transcript::default();
        let result = listener
            .accept()
            .map_err(Into::into)
            .and_then(|(mut stream, _)| {
                run_responder(&mut stream, &mut Session::responder(key), opts, &mut log)
            });
        (result, log)
    });

    let mut log = Transcript::default();
    let mut stream = TcpStream::connect(addr).map_err(data)?;
    log.note(format!("initiator connected to {addr}"));
    let messages: Vec<&str> = args.message.iter().map(String::as_str).collect();
    let outcome = run_initiator(
        &mut stream,
        &mut Session::initiator(key),
        &hello,
        &messages,
        true,
        &mut log,
    );
    let _ = stream.shutdown(Shutdown::Write);
    let (peer, peer_log) = responder
        .join()
        .map_err(|_| CliError::Data("responder thread panicked".into()))?;

    let mut print = |line: &str| writeln!(out, "{line}").map_err(data);
    for line in log.lines() {
        print(line)?;
    }
    for line in peer_log.lines() {
        print(line)?;
    }
    match (&outcome, &peer) {
        (Ok(replies), Ok(_)) => {
            for (sent, back) in messages.iter().zip(replies) {
                print(&format!("round trip: {sent} -> {back}"))?;
            }
            print("session completed")?;
            Ok(())
        }
        (Err(e), _) => Err(CliError::Data(format!("session failed: {e}"))),
        (_, Err(e)) => Err(CliError::Data(format!("responder failed: {e}"))),
    }
}

fn run(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Keystream(a) => cmd_keystream(a, out),
        Command::Encrypt(a) => cmd_cipher(a, false, out),
        Command::Decrypt(a) => cmd_cipher(a, true, out),
        Command::Analyze(a) => cmd_analyze(a, out),
        Command::Calibrate(a) => cmd_calibrate(a, out),
        Command::SessionDemo(a) => cmd_session_demo(a, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("eqstream: {e}");
            ExitCode::from(e.code())
        }
    }
}
