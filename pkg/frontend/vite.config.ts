import { defineConfig } from "vitest/config";

export default defineConfig({
  base: "./",
  build: { outDir: "dist" },
  server: {
    proxy: { "/v1": "http://127.0.0.1:8400" },
  },
  test: {
    environment: "happy-dom",
  },
});
