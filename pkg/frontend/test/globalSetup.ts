import { spawn, type ChildProcess } from "node:child_process";
import type { TestProject } from "vitest/node";

let server: ChildProcess | undefined;

declare module "vitest" {
  export interface ProvidedContext {
    apiBase: string;
  }
}

/** Boot the analysis service on a private port for the integration tests. */
export default async function setup(project: TestProject): Promise<() => void> {
  const port = 8700 + Math.floor(Math.random() * 800);
  const base = `http://127.0.0.1:${port}`;
  server = spawn(
    "python3",
    ["-m", "uvicorn", "loonyend.service:app", "--host", "127.0.0.1", "--port", String(port)],
    { stdio: "ignore" },
  );
  let healthy = false;
  for (let attempt = 0; attempt < 100 && !healthy; attempt++) {
    try {
      const response = await fetch(`${base}/health`);
      healthy = response.ok;
    } catch {
      await new Promise((resolve) => setTimeout(resolve, 100));
    }
  }
  if (!healthy) {
    server.kill();
    throw new Error("analysis service did not come up");
  }
  project.provide("apiBase", base);
  return () => {
    server?.kill();
  };
}
