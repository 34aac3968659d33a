#pragma once

#include <utility>
#include <vector>

#include "aris/skill.hpp"

namespace aris::skills {

// The skill files shipped inside the binary. Project and user tiers override
// any of these by name.
inline const std::vector<const char*>& bundled_skill_texts() {
  static const std::vector<const char*> texts = {
      // -------------------------------------------------- Literature
      R"md(---
name: research-lit
description: Multi-source literature survey seeded from the wiki query pack.
category: Literature
triggers: [survey literature, find related work]
allowed-tools: [search, wiki]
---
## Inputs
Research direction; wiki query pack.

## Outputs
LITERATURE_NOTES: one structured note per surveyed paper.

## Steps
1. Read the query pack; use listed gaps as search seeds.
2. Survey up to `papers_surveyed` papers across sources.
3. Record each paper as a structured note and ingest it into the wiki.

## Quality gates
Every note carries venue, year, and a one-line relevance statement.

## Failure handling
Sources that fail to resolve are listed under `unreachable`, never invented.
)md",
      R"md(---
name: arxiv
description: Fetch paper metadata by identifier.
category: Literature
triggers: [fetch arxiv]
allowed-tools: [search]
---
Look up one paper by identifier and return title, authors, venue, and year.
Unresolvable identifiers are reported as such.
)md",
      R"md(---
name: alphaxiv
description: Produce a compact machine-oriented summary of one paper.
category: Literature
triggers: [summarize paper]
allowed-tools: [search]
---
Summarize a single paper into problem, method, evidence, and limitations,
each one line, for downstream ideation.
)md",
      R"md(---
name: deepxiv
description: Progressive deep literature search over citation chains.
category: Literature
triggers: [deep search]
allowed-tools: [search]
---
Expand from seed papers along citations, depth-first, until the depth budget
is spent. Emit the visited set with one-line relevance notes.
)md",
      R"md(---
name: novelty-check
description: Verify a candidate idea against existing work before investing in it.
category: Literature
triggers: [check novelty]
allowed-tools: [search, review]
---
## Inputs
IDEA_CANDIDATES.

## Outputs
NOVELTY_REPORT: per-idea verdict (novel, incremental, known) with the closest
prior work cited.

## Steps
1. For each candidate, search for the closest existing work.
2. Request an independent review of the comparison.

## Failure handling
When the search is inconclusive the verdict is `unclear`, never `novel`.
)md",
      // -------------------------------------------------- Ideation
      R"md(---
name: idea-creator
description: Brainstorm and rank research ideas, skipping banlisted directions.
category: Ideation
triggers: [brainstorm ideas]
allowed-tools: [wiki]
---
## Inputs
LITERATURE_NOTES; wiki query pack (gaps, rejected ideas, validated claims).

## Outputs
IDEA_CANDIDATES: ranked list, one block per idea with motivation and risk.

## Steps
1. Read the query pack before ideating; treat rejected ideas as a banlist.
2. Generate up to `ideas_generated` candidates; drop banlisted directions.
3. Rank by expected information gain over the validated-claim base.
4. Record each as `idea: <title>` so it enters the wiki as proposed.

## Quality gates
No candidate may duplicate a banlisted idea title.
)md",
      R"md(---
name: idea-discovery
description: Full idea discovery pipeline from direction to ranked report.
category: Ideation
triggers: [discover ideas]
allowed-tools: [search, wiki, review]
---
Chains research-lit, idea-creator, novelty-check, and experiment-plan into a
single pass that ends in a ranked IDEA_REPORT.
)md",
      // -------------------------------------------------- Experiment
      R"md(---
name: experiment-plan
description: Turn the top ranked idea into a concrete experiment plan.
category: Experiment
triggers: [plan experiment]
allowed-tools: []
---
## Inputs
IDEA_CANDIDATES, NOVELTY_REPORT.

## Outputs
IDEA_REPORT: the selected idea plus datasets, baselines, metrics, seeds, and
a stepwise execution plan.

## Quality gates
The plan names every metric it will report and the file each lands in.
)md",
      R"md(---
name: experiment-bridge
description: Implement the experiment plan as runnable code.
category: Experiment
triggers: [implement experiment]
allowed-tools: [runner, review]
---
## Inputs
IDEA_REPORT.

## Outputs
EXPERIMENT_CODE: scripts plus a run manifest.

## Steps
1. Implement scripts per the plan.
2. Request an independent code-correctness review.
3. Sanity-check on the smallest viable configuration before full deployment.

## Failure handling
Failures are classified and remediated per the configured error classes; a
persistent failure is escalated, never papered over.
)md",
      R"md(---
name: run-experiment
description: Deploy experiment code to the configured execution backend.
category: Experiment
triggers: [run experiment]
allowed-tools: [runner]
---
Launch the run manifest on the configured backend and record the submitted
job identifiers in EXPERIMENT_RESULTS.
)md",
      R"md(---
name: monitor-experiment
description: Track running jobs and collect results when they finish.
category: Experiment
triggers: [monitor experiment]
allowed-tools: [runner]
---
Poll submitted jobs, collect outputs, and assemble EXPERIMENT_LOG: one entry
per run with status, metrics, and output file paths.
)md",
      R"md(---
name: check-gpu
description: Summarize accelerator status and running processes.
category: Experiment
triggers: [check gpu]
allowed-tools: [runner]
---
Report device utilization and owning processes from the execution backend.
)md",
      // -------------------------------------------------- Analysis
      R"md(---
name: analyze-results
description: Statistical analysis and comparison tables over experiment logs.
category: Analysis
triggers: [analyze results]
allowed-tools: []
---
## Inputs
EXPERIMENT_LOG.

## Outputs
RESULTS_ANALYSIS: metric tables with candidate claims, one per line as
`claim: <id> | <statement> | <artifact>:<locator>`.
NARRATIVE_REPORT: the prose narrative of what the evidence shows.

## Quality gates
Every stated number cites the result file it came from.
)md",
      R"md(---
name: ablation-planner
description: Design ablations from a reviewer's perspective.
category: Analysis
triggers: [plan ablations]
allowed-tools: []
---
Enumerate the ablations a skeptical reviewer would demand, ranked by how much
each would change the paper's claims.
)md",
      // -------------------------------------------------- Integrity
      R"md(---
name: experiment-audit
description: Audit evaluation code and outputs for integrity failure modes.
category: Integrity
triggers: [audit experiment]
allowed-tools: [review, repo]
---
## Inputs
Evaluation scripts and result files (repository-level access).

## Outputs
EXPERIMENT_AUDIT plus a machine-readable summary.

## Steps
Audit against the five failure modes in the experiment-integrity reference:
model-derived reference labels, self-normalized scores, phantom results,
dead-code or unused-metric inflation, scope inflation.

## Failure handling
The audit is advisory: findings downgrade downstream claims but never halt
the workflow.
)md",
      R"md(---
name: result-to-claim
description: Map experiment results to explicit claim verdicts.
category: Integrity
triggers: [map claims]
allowed-tools: [review, wiki]
---
## Inputs
RESULTS_ANALYSIS candidate claims; optional EXPERIMENT_AUDIT report.

## Outputs
CLAIM_LEDGER: one verdict per claim (supported, partially_supported,
invalidated) with the evidence that supports, qualifies, or contradicts it.

## Quality gates
A claim under an integrity `fail` can never be marked supported until the
integrity issue is resolved.
)md",
      R"md(---
name: paper-claim-audit
description: Zero-context audit of every quantitative claim in a manuscript.
category: Integrity
triggers: [audit claims]
allowed-tools: [review, repo]
---
## Inputs
Manuscript source, claim ledger, raw result and configuration files.

## Outputs
PAPER_CLAIM_AUDIT: one entry per quantitative claim with a status of
exact_match, rounding_ok, number_mismatch, config_mismatch, or
missing_evidence.

## Steps
1. Open a fresh reviewer thread with no prior context.
2. Compare each manuscript number against the ledger and raw evidence.
3. Record aggregation and delta-arithmetic checks alongside direct matches.
)md",
      R"md(---
name: proof-checker
description: Verify theorems and lemmas against a 20-category issue taxonomy.
category: Integrity
triggers: [check proofs]
allowed-tools: [review]
---
## Inputs
Theory sections of the manuscript.

## Outputs
PROOF_OBLIGATIONS: one ledger entry per theorem, lemma, and derived side
condition, each with a proof status and an impact level.

## Steps
1. Verify each theorem application against its side-condition checklist.
2. Run a counterexample red-team pass on every major guarantee.
)md",
      // -------------------------------------------------- Review
      R"md(---
name: auto-review-loop
description: Multi-round review loop that revises until convergence.
category: Review
triggers: [review loop]
allowed-tools: [review, runner]
---
## Inputs
Draft plus supporting experiment artifacts.

## Outputs
IMPROVED_DRAFT and REVIEW_SUMMARY (per-round scores and decisions).

## Steps
Each round: independent review with structured scoring, action-item
extraction, optional follow-up experiments when new evidence is requested,
revision of affected sections, convergence check.

## Quality gates
Terminates when the score exceeds the threshold with all critical items
resolved, or at the round cap.
)md",
      R"md(---
name: research-review
description: Single-shot deep critique of a research artifact.
category: Review
triggers: [deep review]
allowed-tools: [review]
---
Request one independent structured review at maximum reasoning effort and
return the score, action items, and rubric notes verbatim.
)md",
      // -------------------------------------------------- Writing
      R"md(---
name: paper-plan
description: Structural outline plus claims-evidence matrix for the paper.
category: Writing
triggers: [plan paper]
allowed-tools: []
---
## Inputs
NARRATIVE_REPORT (or improved draft).

## Outputs
OUTLINE: section plan where every planned claim points at its evidence.
)md",
      R"md(---
name: paper-write
description: Section-by-section drafting with the five-pass editing routine.
category: Writing
triggers: [write paper]
allowed-tools: [review]
---
## Inputs
OUTLINE and the claim ledger.

## Outputs
DRAFT plus EDITING_REPORT (per-pass change counts).

## Steps
1. Draft each section from the outline.
2. Apply the five editing passes from the writing-principles reference, in
   order, and record per-pass changes.
)md",
      R"md(---
name: paper-figure
description: Produce deterministic figures from declarative specs.
category: Writing
triggers: [make figures]
allowed-tools: [render]
---
Emit one figure spec document per planned figure; the renderer turns each
into SVG deterministically. Positions are explicit, never auto-laid-out.
)md",
      R"md(---
name: paper-compile
description: Compile the manuscript, repairing common build errors.
category: Writing
triggers: [compile paper]
allowed-tools: [runner]
---
Run the compiler via the command runner, retry after repairing recognized
error patterns, and store the compiled output as COMPILED_PDF.
)md",
      R"md(---
name: paper-writing
description: Full paper-writing pipeline orchestrator.
category: Writing
triggers: [write full paper]
allowed-tools: [review, render, runner]
---
Chains paper-plan, paper-figure, paper-write, optional proof-checker,
paper-claim-audit, paper-compile, and the improvement loop.
)md",
      R"md(---
name: auto-paper-improvement-loop
description: Reviewer critique of source and rendered output, then revision.
category: Writing
triggers: [improve paper]
allowed-tools: [review]
---
## Steps
Two rounds: send both the source and the compiled output for review on a
fresh thread, apply the action items, and record the round summary as
IMPROVEMENT_REPORT with the final text as FINAL_DRAFT.
)md",
      R"md(---
name: rebuttal
description: Seven-phase rebuttal builder with three safety gates.
category: Writing
triggers: [write rebuttal]
allowed-tools: [review]
---
## Phases
1. parse-reviews  2. categorize-concerns  3. collect-evidence
4. draft-responses (gate: claims-check)  5. assemble-rebuttal
(gate: evidence-check)  6. polish-tone (gate: tone-check)  7. stress-test

## Quality gates
A failed gate stops all later phases; the run reports which gate failed.
)md",
      // -------------------------------------------------- Memory
      R"md(---
name: research-wiki
description: Maintain the persistent project knowledge graph.
category: Memory
triggers: [update wiki]
allowed-tools: [wiki]
---
Record papers, ideas, experiments, and claims as typed pages; keep edges to
the eight canonical relations; refresh the query pack after changes.
)md",
      // -------------------------------------------------- Maintenance
      R"md(---
name: meta-optimize
description: Analyze usage logs and propose reviewer-gated harness patches.
category: Maintenance
triggers: [optimize harness]
allowed-tools: [review]
---
## Steps
1. Analyze the event log: override hotspots, failing tools, score plateaus.
2. Draft targeted patches to the implicated skill files.
3. Submit each patch for review; only patches scoring at least 7/10 surface.

## Quality gates
Patches are never applied without an explicit human accept.
)md",
  };
  return texts;
}

inline void load_bundled(SkillRegistry& registry) {
  for (const char* text : bundled_skill_texts()) {
    auto spec = parse_skill(text, Tier::bundled, "bundled");
    spec.source_path = "bundled:" + spec.name;
    registry.add(std::move(spec));
  }
}

}  // namespace aris::skills
