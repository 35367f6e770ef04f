export {
  RandstreamClient,
  RemoteRng,
  ServiceError,
  type EngineInfo,
  type CheckRecord,
  type SelftestReport,
  type CreateOptions,
  type ModeState,
  type EntropyReport,
  type SampleParams,
} from './client.js';
export {
  wordToString,
  wordFromString,
  f64FromBytes,
  f32FromBytes,
  u64FromBytes,
  doubleBits,
  floatBits,
  type WordInput,
} from './words.js';
