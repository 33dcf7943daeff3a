//! Crate-wide error type.
//!
//! Every fallible operation in this crate returns [`Error`]. Each variant
//! carries a stable machine-parseable code (see [`Error::code`]) that the
//! CLI prints on failure.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported protocol: {0}")]
    UnsupportedProtocol(String),

    #[error("unsupported link type {0}")]
    UnsupportedLinkType(u32),

    #[error("truncated {layer} header: need {needed} bytes, have {available}")]
    TruncatedHeader {
        layer: &'static str,
        needed: usize,
        available: usize,
    },

    #[error("network layer is not IPv4 (version {version})")]
    NotIpv4 { version: u8 },

    #[error("malformed {layer} header: {detail}")]
    MalformedHeader { layer: &'static str, detail: String },

    #[error("bad pcap magic number {0:#010x}")]
    PcapBadMagic(u32),

    #[error("truncated pcap record at index {index}")]
    PcapTruncatedRecord { index: usize },

    #[error("insufficient items: {available} available, {requested} requested")]
    InsufficientItems { available: usize, requested: usize },

    #[error("invalid synthetic spec: {0}")]
    InvalidSyntheticSpec(String),

    #[error("invalid hex at offset {offset}: {detail}")]
    InvalidHex { offset: usize, detail: String },

    #[error("vocabulary target size {target} is below the floor of {floor}")]
    VocabTooSmall { target: usize, floor: usize },

    #[error("malformed vocabulary file: {0}")]
    VocabFormat(String),

    #[error("unknown token id {0}")]
    UnknownTokenId(u32),

    #[error("sequence budget exceeded: need {needed} tokens, max is {max}")]
    SequenceBudget { needed: usize, max: usize },

    #[error("invalid model config: {0}")]
    InvalidConfig(String),

    #[error("sequence does not fit the model: {0}")]
    SequenceOverflow(String),

    #[error("loss mask excludes every position in the batch")]
    AllMasked,

    #[error("training diverged at step {step}: loss is not finite")]
    NonFiniteLoss { step: usize },

    #[error("item {item}: label {label:?} is not in the task's label set")]
    LabelOutsideSet { item: String, label: String },

    #[error("unknown header field {0:?}")]
    UnknownField(String),

    #[error("vocabulary hash mismatch: checkpoint records {expected}, got {actual}")]
    VocabCheckpointMismatch { expected: String, actual: String },

    #[error("malformed checkpoint: {0}")]
    CheckpointFormat(String),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("invalid data: {0}")]
    InvalidData(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable one-word code for machine-parseable CLI errors.
    pub fn code(&self) -> &'static str {
        match self {
            Error::UnsupportedProtocol(_) => "unsupported-protocol",
            Error::UnsupportedLinkType(_) => "unsupported-link-type",
            Error::TruncatedHeader { .. } => "truncated-header",
            Error::NotIpv4 { .. } => "not-ipv4",
            Error::MalformedHeader { .. } => "malformed-header",
            Error::PcapBadMagic(_) => "pcap-bad-magic",
            Error::PcapTruncatedRecord { .. } => "pcap-truncated-record",
            Error::InsufficientItems { .. } => "insufficient-items",
            Error::InvalidSyntheticSpec(_) => "invalid-synthetic-spec",
            Error::InvalidHex { .. } => "invalid-hex",
            Error::VocabTooSmall { .. } => "vocab-too-small",
            Error::VocabFormat(_) => "vocab-format",
            Error::UnknownTokenId(_) => "unknown-token-id",
            Error::SequenceBudget { .. } => "sequence-budget",
            Error::InvalidConfig(_) => "invalid-config",
            Error::SequenceOverflow(_) => "sequence-overflow",
            Error::AllMasked => "all-masked",
            Error::NonFiniteLoss { .. } => "non-finite-loss",
            Error::LabelOutsideSet { .. } => "label-outside-set",
            Error::UnknownField(_) => "unknown-field",
            Error::VocabCheckpointMismatch { .. } => "vocab-checkpoint-mismatch",
            Error::CheckpointFormat(_) => "checkpoint-format",
            Error::EmptyInput(_) => "empty-input",
            Error::InvalidData(_) => "invalid-data",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }
}
