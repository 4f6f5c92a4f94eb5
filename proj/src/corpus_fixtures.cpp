// Fixture documents for the seven reference cases. The numeric and boolean
// scoring columns are normative; the manifest and justification prose
// encodes the described properties of each case in illustrative form.

#include "corpus_fixtures.hpp"

namespace ail2::corpus::detail {

namespace {

const char* const kC1Workflow = R"json({
  "id": "C1",
  "task": "Take-home course report on an assigned topic, submitted for individual credit",
  "humans": [
    {"name_or_role": "student author", "release_authority": false}
  ],
  "opaque_components": [
    {"name": "general-purpose chatbot", "role": "drafted the full report text"}
  ],
  "source_classes": ["assignment brief", "course reading notes"],
  "context": {
    "purpose": "submit a graded course report as evidence of individual understanding",
    "audience": "course instructor",
    "stakes": "summative",
    "sensitivity_classes": ["student coursework"],
    "runtime_environment": "learning management system submission",
    "learning_intensive": true
  },
  "package": {
    "artifact": {
      "description": "chatbot-generated report text submitted verbatim",
      "artifact_kind": "prose report",
      "runtime_dependencies": [
        {"name": "general-purpose chatbot", "opaque_ai": true, "required_for_routine_use": true}
      ]
    },
    "provenance": "absent",
    "validity": "absent",
    "failure": "absent",
    "resource": "absent"
  }
})json";

const char* const kC1Assessment = R"json({
  "rater_id": "author",
  "workflow_id": "C1",
  "profile": {"m1": 1, "m2": 1, "m3": 0, "m4": 0, "m5": 1, "m6": 2, "m7": 1},
  "capability": {
    "level": 0,
    "modality_note": "no attributable evidence beyond the submitted text"
  },
  "predicates": {
    "art_res": false,
    "sov": false,
    "prot": false,
    "pack": false,
    "justifications": {
      "art_res": "ordinary evidentiary use still takes opaque generation at face value",
      "sov": "no documented authority to accept, reject, or revise before release",
      "prot": "assignment material was pasted into an external service without stated controls",
      "pack": "provenance, validity, failure, and resource elements are all missing"
    }
  },
  "dimension_notes": {
    "m1": "static text, but its evidentiary role rests on unexamined generation",
    "m6": "no runtime service is needed to read the text itself"
  }
})json";

const char* const kC2Workflow = R"json({
  "id": "C2",
  "task": "Course report drafted with LLM assistance and defended in a structured oral examination",
  "humans": [
    {"name_or_role": "student author", "release_authority": false},
    {"name_or_role": "course examiner", "release_authority": true}
  ],
  "opaque_components": [
    {"name": "general-purpose LLM", "role": "drafted substantial parts of the report text"}
  ],
  "source_classes": ["assignment brief", "lecture notes", "draft prompts"],
  "context": {
    "purpose": "graded report plus oral defense as evidence of individual understanding",
    "audience": "course examiner",
    "stakes": "summative",
    "sensitivity_classes": ["student coursework"],
    "runtime_environment": "report submission plus in-person defense session",
    "learning_intensive": true
  },
  "package": {
    "artifact": {
      "description": "report text with the examiner's structured defense protocol attached",
      "artifact_kind": "prose report with oral-defense record",
      "runtime_dependencies": [
        {"name": "general-purpose LLM", "opaque_ai": true, "required_for_routine_use": false}
      ]
    },
    "provenance": {
      "tool_uses": [
        {
          "tool": "general-purpose LLM",
          "purpose": "drafting report sections",
          "data_exposure_class": "assignment text and personal notes",
          "protection": "none stated"
        }
      ],
      "human_decisions": [
        {"action": "modified", "subject": "rewrote the analysis section after the first draft"}
      ],
      "verification_steps": []
    },
    "validity": {
      "intended_purpose": "course-level evidence of topic understanding",
      "assumptions": ["the defense session follows the standard examiner protocol"],
      "user_population": "students of the course",
      "exclusions": [],
      "exclusion_rationale": ""
    },
    "failure": {
      "failure_modes": ["report contains unverified generated claims"],
      "warning_signs": ["defense answers contradict the written text"],
      "triggers": [],
      "escalation_route": ""
    },
    "resource": {
      "routine_use_posture": "local",
      "access_requirements": "course records access",
      "cost_energy_note": "static documents; no recurring inference"
    }
  },
  "evidence_modality": "structured oral defense with examiner protocol"
})json";

const char* const kC2Assessment = R"json({
  "rater_id": "author",
  "workflow_id": "C2",
  "profile": {"m1": 3, "m2": 3, "m3": 2, "m4": 2, "m5": 2, "m6": 3, "m7": 2},
  "capability": {
    "level": 3,
    "modality_note": "structured oral defense under reduced live AI dependence"
  },
  "predicates": {
    "art_res": true,
    "sov": true,
    "prot": false,
    "pack": false,
    "justifications": {
      "art_res": "the attached defense record lets third parties judge the work without rerunning the LLM",
      "sov": "the examiner holds documented authority to accept or fail the combined submission",
      "prot": "coursework reached an external service with no documented protections",
      "pack": "verification steps, exclusions, and escalation content are missing from the package"
    }
  }
})json";

const char* const kC3Workflow = R"json({
  "id": "C3",
  "task": "Symbolic-regression analysis producing an explicit rate equation from bench data",
  "humans": [
    {"name_or_role": "research analyst", "release_authority": true}
  ],
  "opaque_components": [
    {"name": "LLM coding assistant", "role": "prototyped the fitting and plotting scripts"}
  ],
  "source_classes": ["bench measurement tables", "fitting scripts"],
  "context": {
    "purpose": "analysis artifact for downstream modeling work",
    "audience": "collaborating researchers",
    "stakes": "research",
    "sensitivity_classes": ["unpublished measurements"],
    "runtime_environment": "local analysis workstation",
    "learning_intensive": false
  },
  "package": {
    "artifact": {
      "description": "closed-form fitted equation with coefficient table and audited fitting scripts",
      "artifact_kind": "equation with analysis scripts",
      "runtime_dependencies": [
        {"name": "symbolic-regression engine", "opaque_ai": false, "required_for_routine_use": false}
      ]
    },
    "provenance": {
      "tool_uses": [
        {
          "tool": "LLM coding assistant",
          "purpose": "script prototyping",
          "data_exposure_class": "column names and placeholder rows",
          "protection": "measurement values replaced with placeholders"
        },
        {
          "tool": "symbolic-regression engine",
          "purpose": "equation search",
          "data_exposure_class": "full measurement tables",
          "protection": "local execution only"
        }
      ],
      "human_decisions": [
        {"action": "rejected", "subject": "discarded two candidate equations with unphysical asymptotes"},
        {"action": "accepted", "subject": "kept the rational-form candidate with the best holdout error"}
      ],
      "verification_steps": [
        "holdout-set error check",
        "manual re-derivation of fitted coefficients"
      ]
    },
    "validity": "absent",
    "failure": "absent",
    "resource": {
      "routine_use_posture": "local",
      "access_requirements": "none beyond the released artifact",
      "cost_energy_note": "equation evaluation is negligible; the search ran once at development time",
      "low_resource_fallback": "equation usable from the printed coefficient table"
    }
  }
})json";

const char* const kC3Assessment = R"json({
  "rater_id": "author",
  "workflow_id": "C3",
  "profile": {"m1": 4, "m2": 3, "m3": 3, "m4": 1, "m5": 4, "m6": 4, "m7": 3},
  "capability": {"level": "not_applicable"},
  "predicates": {
    "art_res": true,
    "sov": true,
    "prot": true,
    "pack": false,
    "justifications": {
      "art_res": "the equation and scripts stand alone without opaque inference",
      "sov": "the analyst holds release authority with documented accept/reject decisions",
      "prot": "measurements stayed local; only placeholder rows reached the assistant",
      "pack": "the validity-domain statement and failure rule are missing"
    }
  },
  "dimension_notes": {
    "m4": "only a generic caution accompanies the equation; no declared regime or triggers"
  }
})json";

const char* const kC4Workflow = R"json({
  "id": "C4",
  "task": "Symbolic-regression analysis with a declared scope of applicability and failure-oriented tests",
  "humans": [
    {"name_or_role": "research analyst", "release_authority": true}
  ],
  "opaque_components": [
    {"name": "LLM coding assistant", "role": "prototyped the fitting and plotting scripts"}
  ],
  "source_classes": ["bench measurement tables", "fitting scripts"],
  "context": {
    "purpose": "analysis artifact for downstream modeling work",
    "audience": "collaborating researchers",
    "stakes": "research",
    "sensitivity_classes": ["unpublished measurements"],
    "runtime_environment": "local analysis workstation",
    "learning_intensive": false
  },
  "package": {
    "artifact": {
      "description": "closed-form fitted equation with coefficient table, audited fitting scripts, and negative-test results",
      "artifact_kind": "equation with analysis scripts",
      "runtime_dependencies": [
        {"name": "symbolic-regression engine", "opaque_ai": false, "required_for_routine_use": false}
      ]
    },
    "provenance": {
      "tool_uses": [
        {
          "tool": "LLM coding assistant",
          "purpose": "script prototyping",
          "data_exposure_class": "column names and placeholder rows",
          "protection": "measurement values replaced with placeholders"
        },
        {
          "tool": "symbolic-regression engine",
          "purpose": "equation search",
          "data_exposure_class": "full measurement tables",
          "protection": "local execution only"
        }
      ],
      "human_decisions": [
        {"action": "rejected", "subject": "discarded two candidate equations with unphysical asymptotes"},
        {"action": "accepted", "subject": "kept the rational-form candidate with the best holdout error"}
      ],
      "verification_steps": [
        "holdout-set error check",
        "manual re-derivation of fitted coefficients",
        "negative tests outside the fitted regime"
      ]
    },
    "validity": {
      "intended_purpose": "interpolation within the measured concentration and temperature range",
      "assumptions": ["steady-state conditions", "a single dominant reaction pathway"],
      "user_population": "collaborating researchers familiar with the assay",
      "exclusions": [
        "extrapolation beyond the measured temperature window",
        "transient startup regimes"
      ],
      "exclusion_rationale": "fit quality collapses outside the sampled regime in held-out trials"
    },
    "failure": {
      "failure_modes": ["systematic residual drift near the regime boundary"],
      "warning_signs": ["holdout error above twice the fitted-regime error"],
      "triggers": [
        "any use outside the declared concentration range",
        "new data exceeding the residual threshold"
      ],
      "escalation_route": "flag for re-analysis by the responsible analyst before further use"
    },
    "resource": {
      "routine_use_posture": "local",
      "access_requirements": "none beyond the released artifact",
      "cost_energy_note": "equation evaluation is negligible; the search ran once at development time",
      "low_resource_fallback": "equation usable from the printed coefficient table"
    }
  }
})json";

const char* const kC4Assessment = R"json({
  "rater_id": "author",
  "workflow_id": "C4",
  "profile": {"m1": 4, "m2": 4, "m3": 4, "m4": 4, "m5": 4, "m6": 4, "m7": 3},
  "capability": {"level": "not_applicable"},
  "predicates": {
    "art_res": true,
    "sov": true,
    "prot": true,
    "pack": true,
    "justifications": {
      "art_res": "the equation, scripts, and tests stand alone without opaque inference",
      "sov": "the analyst holds release authority with documented accept/reject decisions",
      "prot": "measurements stayed local; only placeholder rows reached the assistant",
      "pack": "all five elements are populated at a materially sufficient level"
    }
  }
})json";

const char* const kC5Workflow = R"json({
  "id": "C5",
  "task": "Teacher-audited practice-form system built from public national-exam items",
  "humans": [
    {"name_or_role": "course teacher", "release_authority": true}
  ],
  "opaque_components": [
    {
      "name": "general-purpose LLM",
      "role": "assisted spreadsheet structuring, explanation drafting, and script prototyping"
    }
  ],
  "source_classes": ["publicly released national-exam items", "item tagging spreadsheet"],
  "context": {
    "purpose": "formative practice support with teacher-side monitoring of item difficulties",
    "audience": "students and teachers of one institution",
    "stakes": "formative",
    "sensitivity_classes": ["public exam items", "institutional account identifiers"],
    "runtime_environment": "institution-hosted web forms under access control",
    "learning_intensive": false
  },
  "package": {
    "artifact": {
      "description": "checked practice forms with answer keys, feedback texts, tagged item spreadsheet, and form-generation scripts",
      "artifact_kind": "web-form system with maintainable scripts",
      "runtime_dependencies": [
        {"name": "institutional form host", "opaque_ai": false, "required_for_routine_use": true}
      ]
    },
    "provenance": {
      "tool_uses": [
        {
          "tool": "general-purpose LLM",
          "purpose": "spreadsheet structuring and explanation drafting",
          "data_exposure_class": "public exam items only",
          "protection": "no student data in prompts"
        },
        {
          "tool": "general-purpose LLM",
          "purpose": "form-generation script prototyping",
          "data_exposure_class": "script skeletons",
          "protection": "no credentials or rosters exposed"
        }
      ],
      "human_decisions": [
        {"action": "modified", "subject": "corrected drafted explanations against the official keys"},
        {"action": "rejected", "subject": "dropped items with ambiguous official wording"},
        {"action": "accepted", "subject": "released the checked form set for student use"}
      ],
      "verification_steps": [
        "answer keys checked against official publications",
        "every form completed end-to-end by the teacher before release"
      ]
    },
    "validity": {
      "intended_purpose": "repeated formative self-study and teacher-side difficulty monitoring",
      "assumptions": ["items remain aligned with the current public exam syllabus"],
      "user_population": "enrolled students preparing for the national examination",
      "exclusions": ["summative grading", "selection or licensure decisions"],
      "exclusion_rationale": "the forms are study aids; mastery claims require separate evidence"
    },
    "failure": {
      "failure_modes": ["answer-key mismatch", "ambiguous item wording"],
      "warning_signs": ["student reports", "anomalous item-level statistics"],
      "triggers": [
        "any suspected key-mismatch report",
        "item statistics falling below the review threshold"
      ],
      "escalation_route": "feedback channel routes the item to teacher review for revision or withdrawal"
    },
    "resource": {
      "routine_use_posture": "local",
      "access_requirements": "institutional account with course enrollment",
      "cost_energy_note": "static forms; no AI inference in routine use",
      "low_resource_fallback": "printable form set generated from the same spreadsheet"
    }
  }
})json";

const char* const kC5Assessment = R"json({
  "rater_id": "author",
  "workflow_id": "C5",
  "profile": {"m1": 4, "m2": 4, "m3": 3, "m4": 4, "m5": 4, "m6": 4, "m7": 4},
  "capability": {"level": "not_applicable"},
  "predicates": {
    "art_res": true,
    "sov": true,
    "prot": true,
    "pack": true,
    "justifications": {
      "art_res": "students use stable audited forms; routine use never invokes the development-time LLM",
      "sov": "the teacher holds documented authority over item acceptance, revision, and release",
      "prot": "only public exam items reached the LLM; accounts and rosters stayed institutional",
      "pack": "all five elements are populated at a materially sufficient level"
    }
  }
})json";

const char* const kC6Workflow = R"json({
  "id": "C6",
  "task": "Course workflow pairing the practice-form system with in-person no-AI mastery checkpoints",
  "humans": [
    {"name_or_role": "course teacher", "release_authority": true}
  ],
  "opaque_components": [
    {"name": "general-purpose LLM", "role": "assists practice-form maintenance on the teacher side"}
  ],
  "source_classes": ["publicly released national-exam items", "checkpoint task bank"],
  "context": {
    "purpose": "course-level mastery evidence combining practice use with non-delegable checkpoints",
    "audience": "students and teachers of one institution",
    "stakes": "summative",
    "sensitivity_classes": ["public exam items", "student checkpoint scripts"],
    "runtime_environment": "institution-hosted web forms plus in-person checkpoint sessions",
    "learning_intensive": true,
    "capability_threshold": 3
  },
  "package": {
    "artifact": {
      "description": "practice-form system plus the checkpoint task bank and marking guide used for mastery claims",
      "artifact_kind": "course workflow package",
      "runtime_dependencies": [
        {"name": "institutional form host", "opaque_ai": false, "required_for_routine_use": true}
      ]
    },
    "provenance": {
      "tool_uses": [
        {
          "tool": "general-purpose LLM",
          "purpose": "practice-form maintenance and explanation drafting",
          "data_exposure_class": "public exam items only",
          "protection": "no student data in prompts"
        }
      ],
      "human_decisions": [
        {"action": "accepted", "subject": "released the checkpoint task bank after trial marking"},
        {"action": "modified", "subject": "rebalanced checkpoint tasks against the practiced items"}
      ],
      "verification_steps": [
        "checkpoint tasks trial-marked by the teacher",
        "practice-form keys checked against official publications"
      ]
    },
    "validity": {
      "intended_purpose": "mastery evidence for course progression decisions",
      "assumptions": ["checkpoints are sat in person under no-AI conditions"],
      "user_population": "enrolled students of the course",
      "exclusions": ["licensure decisions", "use of practice-form scores as mastery evidence"],
      "exclusion_rationale": "practice scores reflect rehearsal; only checkpoint evidence is attributable"
    },
    "failure": {
      "failure_modes": ["checkpoint tasks drifting from practiced content", "suspected impersonation"],
      "warning_signs": ["large gaps between practice scores and checkpoint scores"],
      "triggers": ["any suspected impersonation", "checkpoint failure rate above the review threshold"],
      "escalation_route": "course lead reviews the checkpoint set and affected student records"
    },
    "resource": {
      "routine_use_posture": "local",
      "access_requirements": "institutional account with course enrollment",
      "cost_energy_note": "checkpoints are paper-based; forms are static",
      "low_resource_fallback": "paper checkpoint forms and printable practice sets"
    }
  },
  "evidence_modality": "short in-person no-AI written checkpoints and oral explanation tasks"
})json";

const char* const kC6Assessment = R"json({
  "rater_id": "author",
  "workflow_id": "C6",
  "profile": {"m1": 4, "m2": 4, "m3": 3, "m4": 4, "m5": 4, "m6": 4, "m7": 4},
  "capability": {
    "level": 3,
    "modality_note": "in-person no-AI written checkpoints with oral explanation tasks"
  },
  "predicates": {
    "art_res": true,
    "sov": true,
    "prot": true,
    "pack": true,
    "justifications": {
      "art_res": "mastery evidence comes from no-AI checkpoints; routine use never invokes the LLM",
      "sov": "the teacher holds documented authority over checkpoints, forms, and release",
      "prot": "only public exam items reached the LLM; checkpoint scripts never did",
      "pack": "all five elements are populated at a materially sufficient level"
    }
  }
})json";

const char* const kC7Workflow = R"json({
  "id": "C7",
  "task": "Self-hosted lecture-to-quiz pipeline producing a question bank with deterministic quality control",
  "humans": [
    {"name_or_role": "course teacher", "release_authority": true}
  ],
  "opaque_components": [
    {
      "name": "local open-weights LLM",
      "role": "generated candidate quiz items from lecture content",
      "version_or_date": "frozen local checkpoint recorded in the run log"
    }
  ],
  "source_classes": ["lecture transcripts", "slide decks"],
  "context": {
    "purpose": "maintainable quiz bank for formative course use",
    "audience": "students and teachers of one institution",
    "stakes": "formative",
    "sensitivity_classes": ["course materials"],
    "runtime_environment": "institution-hosted quiz delivery",
    "learning_intensive": false
  },
  "package": {
    "artifact": {
      "description": "question bank with answer keys and the quality-control trace for every released item",
      "artifact_kind": "question bank with QC trace",
      "runtime_dependencies": [
        {"name": "local generation model", "opaque_ai": true, "required_for_routine_use": false},
        {"name": "quiz delivery host", "opaque_ai": false, "required_for_routine_use": true}
      ]
    },
    "provenance": {
      "tool_uses": [
        {
          "tool": "local open-weights LLM",
          "purpose": "candidate item generation from lecture content",
          "data_exposure_class": "course materials only",
          "protection": "local execution; nothing leaves the machine"
        }
      ],
      "human_decisions": [
        {"action": "rejected", "subject": "discarded candidate items failing the deterministic checks"},
        {"action": "accepted", "subject": "released items passing the checks and teacher review"}
      ],
      "verification_steps": [
        "deterministic quality-control checks on every candidate item",
        "teacher review of each released item"
      ]
    },
    "validity": {
      "intended_purpose": "formative quizzing over the delivered lecture content",
      "assumptions": ["lecture content is the single source for item stems"],
      "user_population": "students enrolled in the lecture course",
      "exclusions": ["summative examination use", "content outside the processed lectures"],
      "exclusion_rationale": "items are checked against the lecture source only, not the wider syllabus"
    },
    "failure": {
      "failure_modes": [
        "item stem diverging from the lecture source",
        "answer-key error surviving review"
      ],
      "warning_signs": ["student challenge reports", "unusual item response patterns"],
      "triggers": ["any student challenge", "quality-control failure on regeneration"],
      "escalation_route": "item withdrawn pending teacher re-review"
    },
    "resource": {
      "routine_use_posture": "local",
      "access_requirements": "institutional quiz host account",
      "cost_energy_note": "generation confined to development; routine delivery is static",
      "low_resource_fallback": "question bank exportable as printable sheets"
    }
  }
})json";

const char* const kC7Assessment = R"json({
  "rater_id": "author",
  "workflow_id": "C7",
  "profile": {"m1": 4, "m2": 4, "m3": 4, "m4": 3, "m5": 4, "m6": 4, "m7": 4},
  "capability": {"level": "not_applicable"},
  "predicates": {
    "art_res": true,
    "sov": true,
    "prot": true,
    "pack": true,
    "justifications": {
      "art_res": "the released bank and QC trace are usable and auditable without the generation model",
      "sov": "the teacher holds documented authority over item release and withdrawal",
      "prot": "generation ran locally on course materials; nothing reached external services",
      "pack": "all five elements are populated at a materially sufficient level"
    }
  },
  "dimension_notes": {
    "m4": "limitations are educational and QC-related rather than regime-of-validity statements"
  }
})json";

}  // namespace

const FixtureText kFixtures[7] = {
    {"C1", "Chatbot-authored take-home report submitted as-is", kC1Workflow, kC1Assessment},
    {"C2", "LLM-assisted report plus structured oral defense", kC2Workflow, kC2Assessment},
    {"C3", "Symbolic regression package without validity-domain / failure analysis", kC3Workflow,
     kC3Assessment},
    {"C4", "Symbolic regression package with validity-domain statement and failure-oriented tests",
     kC4Workflow, kC4Assessment},
    {"C5", "Teacher-audited national-exam practice forms (tool only)", kC5Workflow, kC5Assessment},
    {"C6", "Course workflow combining practice forms with no-AI mastery checkpoints", kC6Workflow,
     kC6Assessment},
    {"C7", "Self-hosted Lecture-to-Quiz with deterministic QC", kC7Workflow, kC7Assessment},
};

}  // namespace ail2::corpus::detail
