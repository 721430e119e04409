import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { ApiClient } from "../src/api.js";

const here = dirname(fileURLToPath(import.meta.url));

export function baseUrl(): string {
  return readFileSync(join(here, ".service-url"), "utf-8").trim();
}

export function client(): ApiClient {
  return new ApiClient(baseUrl());
}
