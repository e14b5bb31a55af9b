import { ApiClient } from "./api";
import { mountApp } from "./app";

const root = document.getElementById("app");
if (root === null) throw new Error("missing #app mount point");

// the UI is served under /ui/ on the same origin as the API
mountApp(root, new ApiClient(""));
