import { readFileSync } from "node:fs";

import type { ClimbDetail, ClimbSummary } from "../src/types.js";

function load<T>(name: string): T {
  const url = new URL(`./fixtures/${name}`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf-8")) as T;
}

// Real service responses captured from the backing store's test fixtures.
export const spikeBefore = load<ClimbDetail>("spike_before.json");
export const spikeAfterCrop = load<ClimbDetail>("spike_after_crop.json");
export const constantDetail = load<ClimbDetail>("constant_detail.json");
export const dynamicDetail = load<ClimbDetail>("dynamic_detail.json");
export const listRows = load<ClimbSummary[]>("list.json");

export const allDetails = [spikeBefore, spikeAfterCrop, constantDetail, dynamicDetail];
