/**
 * Client for the randstream HTTP service.
 *
 * A RandstreamClient talks to one server; RemoteRng wraps one
 * server-side generator handle. Every operation mirrors a library
 * call and fails with a ServiceError carrying the server's
 * diagnostic, which also stays readable through lastError().
 */

import { wordToString, wordFromString, type WordInput } from './words.js';

export interface EngineInfo {
  id: string;
  name: string;
  authors: string;
  year: number;
  state_words: number;
  seed_words: number;
  period: string;
}

export interface CheckRecord {
  name: string;
  statistic: number;
  p_value: number;
  passed: boolean;
}

export interface SelftestReport {
  engine: string;
  passed: boolean;
  records: CheckRecord[];
}

export interface CreateOptions {
  engine?: string;
  seed?: WordInput[];
  spawnKey?: WordInput[];
}

export interface ModeState {
  bitexact: boolean;
  full_mantissa: boolean;
}

export interface EntropyReport {
  source: string;
  degraded: boolean;
}

export type SampleParams = Record<string, number | string | number[] | number[][]>;

/* Distributions whose draws arrive as decimal strings. */
const WORD_VALUED = new Set(['uint64', 'long_long']);

export class ServiceError extends Error {
  readonly status: number;

  constructor(status: number, detail: string) {
    super(detail);
    this.name = 'ServiceError';
    this.status = status;
  }
}

async function throwFrom(resp: Response): Promise<never> {
  let detail = resp.statusText;
  try {
    const body = (await resp.json()) as { detail?: string };
    if (body.detail) detail = body.detail;
  } catch {
    /* non-JSON error body; keep the status text */
  }
  throw new ServiceError(resp.status, detail);
}

export class RandstreamClient {
  readonly baseUrl: string;

  constructor(baseUrl: string) {
    this.baseUrl = baseUrl.replace(/\/+$/, '');
  }

  async health(): Promise<boolean> {
    const resp = await fetch(`${this.baseUrl}/health`);
    return resp.ok;
  }

  async engines(): Promise<EngineInfo[]> {
    return this.getJson('/engines') as Promise<EngineInfo[]>;
  }

  async create(options: CreateOptions = {}): Promise<RemoteRng> {
    const body: Record<string, unknown> = {};
    if (options.engine !== undefined) body.engine = options.engine;
    if (options.seed !== undefined) body.seed = options.seed.map(wordToString);
    if (options.spawnKey !== undefined) {
      body.spawn_key = options.spawnKey.map(wordToString);
    }
    const made = (await this.postJson('/rngs', body)) as {
      handle: string;
      engine: string;
    };
    return new RemoteRng(this, made.handle, made.engine);
  }

  /** Rebuild a generator from a serialized checkpoint (base64). */
  async restore(blob: string): Promise<RemoteRng> {
    const made = (await this.postJson('/rngs/restore', { blob })) as {
      handle: string;
      engine: string;
    };
    return new RemoteRng(this, made.handle, made.engine);
  }

  async selftest(engine?: string, n = 100000): Promise<SelftestReport> {
    return this.postJson('/selftest', { engine, n }) as Promise<SelftestReport>;
  }

  async getJson(path: string): Promise<unknown> {
    const resp = await fetch(this.baseUrl + path);
    if (!resp.ok) await throwFrom(resp);
    return resp.json();
  }

  async postJson(path: string, body: unknown): Promise<unknown> {
    const resp = await fetch(this.baseUrl + path, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(body),
    });
    if (!resp.ok) await throwFrom(resp);
    return resp.json();
  }

  async send(method: string, path: string, body?: unknown): Promise<Response> {
    const resp = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? {} : { 'content-type': 'application/json' },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!resp.ok) await throwFrom(resp);
    return resp;
  }
}

export class RemoteRng {
  readonly client: RandstreamClient;
  readonly handle: string;
  readonly engine: string;

  constructor(client: RandstreamClient, handle: string, engine: string) {
    this.client = client;
    this.handle = handle;
    this.engine = engine;
  }

  private path(tail: string): string {
    return `/rngs/${this.handle}${tail}`;
  }

  async seed(seed: WordInput[], spawnKey: WordInput[] = []): Promise<void> {
    await this.client.postJson(this.path('/seed'), {
      seed: seed.map(wordToString),
      spawn_key: spawnKey.map(wordToString),
    });
  }

  async randomize(): Promise<EntropyReport> {
    return this.client.postJson(this.path('/randomize'), {}) as Promise<EntropyReport>;
  }

  async jump(k: number): Promise<void> {
    await this.client.postJson(this.path('/jump'), { k });
  }

  async advance(n: WordInput): Promise<void> {
    await this.client.postJson(this.path('/advance'), { n: wordToString(n) });
  }

  async setStream(words: WordInput[]): Promise<void> {
    await this.client.postJson(this.path('/stream'), {
      words: words.map(wordToString),
    });
  }

  async duplicate(): Promise<RemoteRng> {
    const made = (await this.client.postJson(this.path('/duplicate'), {})) as {
      handle: string;
      engine: string;
    };
    return new RemoteRng(this.client, made.handle, made.engine);
  }

  /** Draws from a float-valued distribution. */
  async sample(dist: string, params: SampleParams = {}, n = 1): Promise<number[]> {
    if (WORD_VALUED.has(dist)) {
      throw new TypeError(`${dist} draws are 64-bit; use sampleWords()`);
    }
    const body = (await this.client.postJson(this.path('/sample'), {
      dist,
      params,
      n,
    })) as { values: number[] };
    return body.values;
  }

  /** Draws whose values are full 64-bit words, returned as bigint. */
  async sampleWords(dist: string, params: SampleParams = {}, n = 1): Promise<bigint[]> {
    const body = (await this.client.postJson(this.path('/sample'), {
      dist,
      params,
      n,
    })) as { values: (string | number)[] };
    return body.values.map((v) =>
      typeof v === 'string' ? wordFromString(v) : BigInt(v),
    );
  }

  /** Multivariate normal draws; rows arrive as plain number arrays. */
  async mvn(
    mean: number[],
    cov: number[][],
    n = 1,
    layout: 'n_d' | 'd_n' = 'n_d',
  ): Promise<number[][]> {
    const body = (await this.client.postJson(this.path('/sample'), {
      dist: 'mvn',
      params: { mean, cov, layout },
      n,
    })) as { values: number[][] };
    return body.values;
  }

  async raw(nbytes: number): Promise<Uint8Array> {
    const resp = await this.client.send('POST', this.path('/raw'), { nbytes });
    return new Uint8Array(await resp.arrayBuffer());
  }

  async setMode(mode: { bitexact?: boolean; fullMantissa?: boolean }): Promise<ModeState> {
    return this.client.postJson(this.path('/mode'), {
      bitexact: mode.bitexact,
      full_mantissa: mode.fullMantissa,
    }) as Promise<ModeState>;
  }

  async getState(): Promise<bigint[]> {
    const body = (await this.client.getJson(this.path('/state'))) as {
      words: string[];
    };
    return body.words.map(wordFromString);
  }

  async setState(words: WordInput[]): Promise<void> {
    await this.client.send('PUT', this.path('/state'), {
      words: words.map(wordToString),
    });
  }

  /** Serialized checkpoint, base64 of the binary state blob. */
  async serialized(): Promise<string> {
    const body = (await this.client.getJson(this.path('/serialized'))) as {
      blob: string;
    };
    return body.blob;
  }

  async lastError(): Promise<string> {
    const body = (await this.client.getJson(this.path('/error'))) as {
      last_error: string;
    };
    return body.last_error;
  }

  async free(): Promise<void> {
    await this.client.send('DELETE', this.path(''));
  }
}
