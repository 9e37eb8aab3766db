#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fibertwist/catalog.hpp"

namespace fixtures {

using fibertwist::Int;
using fibertwist::WeightedForm;

// A quoted "≅" chain; permuted marks chains whose later links reorder weights.
struct Chain {
    std::vector<WeightedForm> links;
    bool permuted = false;
};

inline const std::vector<Chain>& chains()
{
    static const std::vector<Chain> c = {
        {{{{2, 3, 6}, 12}, {{2, 1, 2}, 4}, {{1, 1, 1}, 2}}},
        {{{{1, 3, 6}, 12}, {{1, 1, 2}, 4}}},
        {{{{2, 6}, 12}, {{1, 3}, 6}, {{1, 1}, 2}}},
        {{{{3, 6}, 12}, {{1, 2}, 4}, {{1, 1}, 2}}},
        {{{{4, 4}, 12}, {{1, 1}, 3}}},
        {{{{3, 4, 4}, 12}, {{3, 1, 1}, 3}}},
        {{{{1, 4, 4}, 12}, {{1, 1, 1}, 3}}},
        {{{{1, 5, 10}, 20}, {{1, 1, 2}, 4}}},
        {{{{4, 5, 10}, 20}, {{4, 1, 2}, 4}, {{2, 1, 1}, 2}}},
        {{{{5, 10}, 20}, {{1, 2}, 4}, {{1, 1}, 2}}},
        {{{{4, 10}, 20}, {{2, 5}, 10}, {{1, 1}, 1}}},
        {{{{1, 14, 21}, 42}, {{1, 2, 3}, 6}}},
        {{{{14, 21}, 42}, {{2, 3}, 6}, {{1, 1}, 1}}},
        {{{{6, 21}, 42}, {{2, 7}, 14}, {{1, 1}, 1}}},
        {{{{6, 14}, 42}, {{3, 7}, 21}, {{1, 1}, 1}}},
        {{{{10, 15}, 30}, {{2, 3}, 6}, {{1, 1}, 1}}},
        {{{{3, 15}, 30}, {{1, 5}, 10}, {{1, 1}, 2}}},
        {{{{2, 10}, 30}, {{1, 5}, 15}, {{1, 1}, 3}}},
        {{{{2, 10, 15}, 30}, {{1, 5, 15}, 15}, {{1, 1, 3}, 3}}},
        {{{{3, 10, 15}, 30}, {{1, 10, 5}, 10}, {{1, 2, 1}, 2}}},
        {{{{6, 33}, 66}, {{6, 3}, 6}, {{2, 1}, 2}}},
        {{{{6, 22}, 66}, {{6, 2}, 6}, {{3, 1}, 3}}},
        {{{{6, 22, 33}, 66}, {{6, 2, 3}, 6}, {{1, 1, 1}, 1}}},
        {{{{2, 3, 6, 6}, 18}, {{2, 1, 2, 2}, 6}, {{1, 1, 1, 1}, 3}}},
        {{{{3, 6, 6}, 18}, {{1, 2, 2}, 6}, {{1, 1, 1}, 3}}},
        {{{{2, 6, 6}, 18}, {{1, 3, 3}, 9}, {{1, 1, 1}, 3}}},
        {{{{6, 6}, 18}, {{1, 1}, 3}}},
        {{{{1, 3, 6, 6}, 18}, {{1, 1, 2, 2}, 6}}},
        {{{{2, 2}, 6}, {{1, 1}, 3}}},
        {{{{2, 6, 9, 18}, 36}, {{2, 2, 3, 6}, 12}, {{1, 1, 3, 3}, 6}}},
        {{{{6, 9, 18}, 36}, {{2, 3, 6}, 12}, {{2, 1, 2}, 4}, {{1, 1, 1}, 2}}},
        {{{{2, 6, 18}, 36}, {{1, 3, 9}, 18}, {{1, 1, 3}, 6}}},
        {{{{6, 18}, 36}, {{1, 3}, 6}, {{1, 1}, 2}}},
        {{{{9, 18}, 36}, {{1, 2}, 4}, {{1, 1}, 2}}},
        {{{{2, 18, 42}, 126}, {{1, 3, 7}, 21}}},
        {{{{2, 18, 42, 63}, 126}, {{1, 3, 7, 21}, 21}}},
        {{{{4, 8, 8}, 24}, {{1, 2, 2}, 6}, {{1, 1, 1}, 3}}},
        {{{{8, 8}, 24}, {{1, 1}, 3}}},
        {{{{3, 4, 8, 8}, 24}, {{1, 2, 3, 2}, 6}}, true},
        {{{{8, 12, 24}, 48}, {{1, 1, 1}, 2}}},
        {{{{3, 12, 24}, 48}, {{1, 1, 2}, 4}}},
        {{{{12, 24}, 48}, {{1, 1}, 2}}},
        {{{{8, 24}, 48}, {{1, 1}, 2}}},
        {{{{2, 5, 10, 10}, 30}, {{1, 1, 1, 1}, 3}}},
        {{{{3, 5, 10, 10}, 30}, {{1, 2, 2, 3}, 6}}, true},
    };
    return c;
}

// Quoted chains that no rule sequence produces (misprints).
inline const std::vector<std::pair<WeightedForm, WeightedForm>>& broken_chains()
{
    static const std::vector<std::pair<WeightedForm, WeightedForm>> c = {
        {{{3, 8, 12, 24}, 48}, {{1, 1, 2, 2}, 3}},
    };
    return c;
}

// "= k points" statements.
struct PointFact {
    WeightedForm form;
    Int points;
};

inline const std::vector<PointFact>& point_facts()
{
    static const std::vector<PointFact> p = {
        {{{2, 6}, 12}, 2},  {{{3, 6}, 12}, 2},  {{{4, 4}, 12}, 3},  {{{5, 10}, 20}, 2}, {{{4, 10}, 20}, 1},
        {{{14, 21}, 42}, 1}, {{{6, 21}, 42}, 1}, {{{6, 14}, 42}, 1}, {{{10, 15}, 30}, 1}, {{{3, 15}, 30}, 2},
        {{{2, 10}, 30}, 3}, {{{6, 33}, 66}, 1}, {{{6, 22}, 66}, 1}, {{{6, 6}, 18}, 3},  {{{2, 2}, 6}, 3},
        {{{6, 18}, 36}, 2}, {{{9, 18}, 36}, 2}, {{{8, 8}, 24}, 3},  {{{12, 24}, 48}, 2}, {{{8, 24}, 48}, 2},
    };
    return p;
}

struct GenusFact {
    WeightedForm form;
    Int genus;
};

inline const std::vector<GenusFact>& genus_facts()
{
    static const std::vector<GenusFact> g = {
        // elliptic
        {{{1, 3, 6}, 12}, 1}, {{{1, 4, 4}, 12}, 1}, {{{1, 5, 10}, 20}, 1}, {{{1, 14, 21}, 42}, 1},
        {{{3, 6, 6}, 18}, 1}, {{{2, 6, 6}, 18}, 1}, {{{4, 8, 8}, 24}, 1}, {{{3, 12, 24}, 48}, 1},
        {{{1, 1, 2}, 4}, 1}, {{{1, 2, 3}, 6}, 1}, {{{1, 1, 1}, 3}, 1},
        // rational
        {{{2, 3, 6}, 12}, 0}, {{{3, 4, 4}, 12}, 0}, {{{4, 5, 10}, 20}, 0}, {{{2, 10, 15}, 30}, 0},
        {{{3, 10, 15}, 30}, 0}, {{{6, 22, 33}, 66}, 0}, {{{6, 9, 18}, 36}, 0}, {{{8, 12, 24}, 48}, 0},
        {{{1, 1, 1}, 2}, 0}, {{{1, 1, 1}, 1}, 0},
        // higher genus
        {{{1, 1, 3}, 6}, 2}, {{{2, 6, 18}, 36}, 2}, {{{1, 2, 7}, 14}, 3}, {{{2, 18, 42}, 126}, 6},
    };
    return g;
}

// Lemma fixtures: type, expected v, whether the source states another value.
struct LemmaFact {
    Int d, a, b, c;
    Int v;
    std::optional<Int> published_v;
};

inline const std::vector<LemmaFact>& lemma_facts()
{
    static const std::vector<LemmaFact> l = {
        {6, 1, 2, 3, 7, {}},    {9, 1, 2, 6, 8, {}},    {8, 1, 3, 4, 8, {}},     {12, 1, 3, 8, 11, 10},
        {21, 1, 2, 18, 14, {}}, {28, 1, 3, 24, 18, {}}, {10, 1, 4, 5, 10, {}},   {15, 1, 4, 10, 12, {}},
        {14, 1, 6, 7, 13, {}},  {21, 1, 6, 14, 17, {}}, {49, 1, 6, 42, 30, {}},
    };
    return l;
}

// Reference star-fiber counts: components, sections.
struct ReferenceFact {
    std::string star;
    Int components;
    std::optional<Int> sections;
};

inline const std::vector<ReferenceFact>& reference_facts()
{
    static const std::vector<ReferenceFact> c = {
        {"IV1*", 3, 4},
        {"IX1****", 26, {}},
        {"XII3***", 33, {}},
        {"IX1***", 16, {}},
    };
    return c;
}

}  // namespace fixtures
