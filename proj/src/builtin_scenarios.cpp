#include "nok/scenario.hpp"

namespace nok {

namespace {

// The five shipped certificates. The engine has no hard-coded slice
// formulas outside the slice-model constructors; everything a certificate
// claims lives in these documents (also shipped under scenarios/).

const std::string kCase31 = R"({
  "name": "thm-main-case-3.1",
  "param": "eps",
  "param_interval": ["0", "3/2"],
  "open_lo": true,
  "open_hi": false,
  "threshold": "29/3",
  "strict": true,
  "notes": "Seshadri constant computed by a non-degenerate curve of origin multiplicity 5; width capped at three times the entry time.",
  "branches": [
    {
      "param_interval": ["0", "3/2"],
      "segments": [
        {
          "t_from": "0",
          "t_to": "eps",
          "area": "t^2/2",
          "constraints": [ { "type": "simplex_cap" } ]
        },
        {
          "t_from": "eps",
          "t_to": "5*eps/4",
          "area": "(t^2 - 5*(t - eps)^2)/2",
          "constraints": [ { "type": "vcurve", "q": 5, "t_c": "eps" } ]
        },
        {
          "t_from": "5*eps/4",
          "t_to": "3*eps",
          "area": "5/8*eps^2",
          "constraints": [ { "type": "vcurve", "q": 5, "t_c": "eps" } ]
        }
      ]
    }
  ]
}
)";

const std::string kCase32 = R"({
  "name": "thm-main-case-3.2",
  "param": "eps",
  "param_interval": ["3/2", "2"],
  "open_lo": false,
  "open_hi": false,
  "threshold": "29/3",
  "strict": true,
  "notes": "Non-degenerate curve of origin multiplicity 4, then two surfaces singular at the origin collapse the width; the triangle tail opens at eps = 30/17.",
  "branches": [
    {
      "param_interval": ["3/2", "30/17"],
      "segments": [
        {
          "t_from": "0",
          "t_to": "eps",
          "area": "t^2/2",
          "constraints": [ { "type": "simplex_cap" } ]
        },
        {
          "t_from": "eps",
          "t_to": "4*eps/3",
          "area": "(t^2 - 4*(t - eps)^2)/2",
          "constraints": [ { "type": "vcurve", "q": 4, "t_c": "eps" } ]
        },
        {
          "t_from": "4*eps/3",
          "t_to": "6 - eps",
          "area": "2/3*eps^2",
          "constraints": [ { "type": "vcurve", "q": 4, "t_c": "eps" } ]
        }
      ]
    },
    {
      "param_interval": ["30/17", "2"],
      "segments": [
        {
          "t_from": "0",
          "t_to": "eps",
          "area": "t^2/2",
          "constraints": [ { "type": "simplex_cap" } ]
        },
        {
          "t_from": "eps",
          "t_to": "4*eps/3",
          "area": "(t^2 - 4*(t - eps)^2)/2",
          "constraints": [ { "type": "vcurve", "q": 4, "t_c": "eps" } ]
        },
        {
          "t_from": "4*eps/3",
          "t_to": "6 - eps",
          "area": "2/3*eps^2",
          "constraints": [ { "type": "vcurve", "q": 4, "t_c": "eps" } ]
        },
        {
          "t_from": "6 - eps",
          "t_to": "(24 + 8*eps)/9",
          "area": "((24 + 8*eps)/3 - 3*t)^2/2",
          "constraints": [
            {
              "type": "surface_collapse",
              "surfaces": [
                { "m": 2, "t1": "6 - eps", "m0": "(6 - eps)/3" },
                { "m": 2, "t1": "2*eps", "m0": "0" }
              ]
            }
          ]
        }
      ]
    }
  ]
}
)";

const std::string kCase33 = R"({
  "name": "thm-main-case-3.3",
  "param": "eps",
  "param_interval": ["2", "3"],
  "open_lo": false,
  "open_hi": true,
  "threshold": "59/6",
  "strict": true,
  "notes": "Entry-time curve bound followed by one surface of origin multiplicity 2. A stretch variant against the tighter volume floor 56/6 is feasible with finer slicing; it is not part of the default suite.",
  "branches": [
    {
      "param_interval": ["2", "3"],
      "segments": [
        {
          "t_from": "0",
          "t_to": "eps",
          "area": "t^2/2",
          "constraints": [ { "type": "simplex_cap" } ]
        },
        {
          "t_from": "eps",
          "t_to": "6 - eps",
          "area": "(t^2 - (t - eps)^2)/2",
          "constraints": [ { "type": "curve_hull", "t_c": "eps" } ]
        },
        {
          "t_from": "6 - eps",
          "t_to": "8 - 4*eps/3",
          "area": "(8 - 4*eps/3 - t)^2/2",
          "constraints": [
            {
              "type": "surface_collapse",
              "surfaces": [ { "m": 2, "t1": "6 - eps", "m0": "(6 - eps)/3" } ]
            }
          ]
        }
      ]
    }
  ]
}
)";

const std::string kCor1 = R"({
  "name": "cor-main-case-1",
  "param": "t1",
  "param_interval": ["7/2", "15/4"],
  "open_lo": false,
  "open_hi": true,
  "threshold": "20/3",
  "strict": true,
  "notes": "Curve entering at 15 - 4*t1, a constant mid bound, then a surface of origin multiplicity 2 cut at width 4. The supremum over the parameter interval is certified by exact critical-point analysis of the full volume polynomial rather than factor-wise endpoint estimates.",
  "branches": [
    {
      "param_interval": ["7/2", "15/4"],
      "segments": [
        {
          "t_from": "0",
          "t_to": "15 - 4*t1",
          "area": "t^2/2",
          "constraints": [ { "type": "simplex_cap" } ]
        },
        {
          "t_from": "15 - 4*t1",
          "t_to": "3",
          "area": "(t^2 - (t - (15 - 4*t1))^2)/2",
          "constraints": [ { "type": "curve_hull", "t_c": "15 - 4*t1" } ]
        },
        {
          "t_from": "3",
          "t_to": "t1",
          "area": "9/2",
          "constraints": []
        },
        {
          "t_from": "t1",
          "t_to": "4",
          "area": "(4*t1/3 - t)^2/2",
          "constraints": [
            {
              "type": "surface_collapse",
              "surfaces": [ { "m": 2, "t1": "t1", "m0": "t1/3" } ]
            }
          ]
        }
      ]
    }
  ]
}
)";

const std::string kCor2 = R"({
  "name": "cor-main-case-2",
  "param": "t1",
  "param_interval": ["3", "7/2"],
  "open_lo": true,
  "open_hi": true,
  "threshold": "20/3",
  "strict": true,
  "notes": "Curve entering at 15 - 4*t1, then a surface of origin multiplicity 2 integrated up to its collapse time 4*t1/3.",
  "branches": [
    {
      "param_interval": ["3", "7/2"],
      "segments": [
        {
          "t_from": "0",
          "t_to": "15 - 4*t1",
          "area": "t^2/2",
          "constraints": [ { "type": "simplex_cap" } ]
        },
        {
          "t_from": "15 - 4*t1",
          "t_to": "t1",
          "area": "(t^2 - (t - (15 - 4*t1))^2)/2",
          "constraints": [ { "type": "curve_hull", "t_c": "15 - 4*t1" } ]
        },
        {
          "t_from": "t1",
          "t_to": "4*t1/3",
          "area": "(4*t1/3 - t)^2/2",
          "constraints": [
            {
              "type": "surface_collapse",
              "surfaces": [ { "m": 2, "t1": "t1", "m0": "t1/3" } ]
            }
          ]
        }
      ]
    }
  ]
}
)";

} // namespace

std::vector<std::string> builtin_scenario_names() {
    return {"thm-main-case-3.1", "thm-main-case-3.2", "thm-main-case-3.3", "cor-main-case-1",
            "cor-main-case-2"};
}

const std::string& builtin_scenario_json(const std::string& name) {
    if (name == "thm-main-case-3.1") return kCase31;
    if (name == "thm-main-case-3.2") return kCase32;
    if (name == "thm-main-case-3.3") return kCase33;
    if (name == "cor-main-case-1") return kCor1;
    if (name == "cor-main-case-2") return kCor2;
    throw DomainError("unknown built-in scenario '" + name + "'");
}

} // namespace nok
