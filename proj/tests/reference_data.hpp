// Published values transcribed for golden comparisons.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace entkit_test {

struct LstarRow {
  std::string modes;
  std::vector<int> lstars;
};

// L* sets, in published row order (n ascending).
inline const std::vector<LstarRow> kLstarTable = {
    {"2x2", {2}},         {"2x3", {2}},       {"2x4", {2}},       {"2x2x2", {2, 4}},       {"3x3", {3}},
    {"2x5", {2}},         {"2x6", {2}},       {"3x4", {3}},       {"2x2x3", {4}},          {"2x7", {2}},
    {"3x5", {3}},         {"2x8", {2}},       {"4x4", {4}},       {"2x2x4", {4}},          {"2x2x2x2", {2, 4, 6, 8}},
    {"2x9", {2}},         {"3x6", {3}},       {"2x3x3", {6}},     {"2x10", {2}},           {"4x5", {4}},
    {"2x2x5", {4}},       {"3x7", {3}},       {"2x11", {2}},      {"2x12", {2}},           {"3x8", {3}},
    {"4x6", {4}},         {"2x2x6", {4}},     {"2x3x4", {6}},     {"2x2x2x3", {6}},        {"5x5", {5}},
    {"2x13", {2}},        {"3x9", {3}},       {"3x3x3", {3, 6, 9}}, {"2x14", {2}},         {"4x7", {4}},
    {"2x2x7", {4}},
};

struct CanonicalRow {
  std::string modes;
  std::vector<int> levels;
};

// One canonical maximally entangled level set per structure.
inline const std::vector<CanonicalRow> kCanonicalTable = {
    {"2x2", {1, 4}},
    {"2x3", {1, 5}},
    {"2x4", {1, 6}},
    {"2x2x2", {1, 8}},
    {"3x3", {1, 5, 9}},
    {"2x5", {1, 7}},
    {"2x6", {1, 8}},
    {"3x4", {1, 6, 11}},
    {"2x2x3", {1, 5, 8, 12}},
    {"2x7", {1, 9}},
    {"3x5", {1, 7, 13}},
    {"2x8", {1, 10}},
    {"4x4", {1, 6, 11, 16}},
    {"2x2x4", {1, 6, 11, 16}},
    {"2x2x2x2", {1, 16}},
    {"2x9", {1, 11}},
    {"3x6", {1, 8, 15}},
    {"2x3x3", {1, 5, 9, 11, 15, 16}},
    {"2x10", {1, 12}},
    {"4x5", {1, 7, 13, 19}},
    {"2x2x5", {1, 7, 13, 19}},
    {"3x7", {1, 9, 17}},
    {"2x11", {1, 13}},
    {"2x12", {1, 14}},
    {"3x8", {1, 10, 19}},
    {"4x6", {1, 8, 15, 22}},
    {"2x2x6", {1, 8, 15, 22}},
    {"2x3x4", {1, 6, 11, 14, 17, 24}},
    {"2x2x2x3", {1, 5, 8, 18, 21, 22}},
    {"5x5", {1, 7, 13, 19, 25}},
    {"2x13", {1, 15}},
    {"3x9", {1, 11, 21}},
    {"3x3x3", {1, 14, 27}},
    {"2x14", {1, 16}},
    {"4x7", {1, 9, 17, 25}},
    {"2x2x7", {1, 9, 17, 25}},
};

struct AllSetsRow {
  std::string modes;
  std::vector<std::vector<int>> sets;
};

// Every maximally entangled level set for the nine smallest systems.
inline const std::vector<AllSetsRow> kAllSetsTable = {
    {"2x2", {{1, 4}, {2, 3}}},
    {"2x3", {{1, 5}, {1, 6}, {2, 4}, {2, 6}, {3, 4}, {3, 5}}},
    {"2x4", {{1, 6}, {1, 7}, {1, 8}, {2, 5}, {2, 7}, {2, 8}, {3, 5}, {3, 6}, {3, 8}, {4, 5}, {4, 6}, {4, 7}}},
    {"2x2x2", {{1, 8}, {2, 7}, {3, 6}, {4, 5}, {1, 4, 6, 7}, {2, 3, 5, 8}}},
    {"3x3", {{1, 5, 9}, {1, 6, 8}, {2, 4, 9}, {2, 6, 7}, {3, 4, 8}, {3, 5, 7}}},
    {"2x5", {{1, 7}, {1, 8}, {1, 9}, {1, 10}, {2, 6}, {2, 8}, {2, 9}, {2, 10}, {3, 6}, {3, 7},
             {3, 9}, {3, 10}, {4, 6}, {4, 7}, {4, 8}, {4, 10}, {5, 6}, {5, 7}, {5, 8}, {5, 9}}},
    {"2x6", {{1, 8},  {1, 9},  {1, 10}, {1, 11}, {1, 12}, {2, 7},  {2, 9},  {2, 10}, {2, 11}, {2, 12},
             {3, 7},  {3, 8},  {3, 10}, {3, 11}, {3, 12}, {4, 7},  {4, 8},  {4, 9},  {4, 11}, {4, 12},
             {5, 7},  {5, 8},  {5, 9},  {5, 10}, {5, 12}, {6, 7},  {6, 8},  {6, 9},  {6, 10}, {6, 11}}},
    {"3x4", {{1, 6, 11}, {1, 6, 12}, {1, 7, 10}, {1, 7, 12}, {1, 8, 10}, {1, 8, 11}, {2, 5, 11}, {2, 5, 12},
             {2, 7, 9},  {2, 7, 12}, {2, 8, 9},  {2, 8, 11}, {3, 5, 10}, {3, 5, 12}, {3, 6, 9},  {3, 6, 12},
             {3, 8, 9},  {3, 8, 10}, {4, 5, 10}, {4, 5, 11}, {4, 6, 9},  {4, 6, 11}, {4, 7, 9},  {4, 7, 10}}},
    {"2x2x3", {{1, 5, 8, 12}, {1, 5, 9, 10}, {1, 6, 8, 10}, {1, 6, 9, 11}, {2, 4, 7, 12}, {2, 4, 9, 11},
               {2, 6, 7, 11}, {2, 6, 9, 10}, {3, 4, 7, 11}, {3, 4, 8, 12}, {3, 5, 7, 12}, {3, 5, 8, 10}}},
};

// 2x2x3 walkthrough, starting level 1, L* = 4.
inline const std::vector<int> kWalkPrimaryGoals = {2, 2, 2, 2, 2, 1, 1};
inline const std::vector<std::vector<int>> kWalkGoals = {
    {2, 2, 2, 2, 2, 1, 1}, {2, 2, 2, 2, 1, 2, 1}, {2, 2, 2, 2, 1, 1, 2}};
inline const std::vector<std::string> kWalkOmega = {
    "1010100", "1010010", "1010001", "1001100", "1001010", "1001001",
    "0110100", "0110010", "0110001", "0101100", "0101010", "0101001"};
inline const std::vector<std::string> kWalkMask = {
    "100011011111", "010101101111", "001110110111", "011100111011",
    "101010111101", "110001111110", "011111100011", "101111010101",
    "110111001110", "111011011100", "111101101010", "111110110001"};
inline const std::vector<int> kWalkCompatible = {5, 6, 8, 9, 10, 11, 12};
inline const std::vector<std::vector<int>> kWalkPairwise = {
    {1, 5, 8, 10}, {1, 5, 8, 12}, {1, 5, 9, 10}, {1, 6, 8, 10}, {1, 6, 9, 10}, {1, 6, 9, 11}};
inline const std::vector<std::vector<int>> kWalkMaximal = {
    {1, 5, 8, 12}, {1, 5, 9, 10}, {1, 6, 8, 10}, {1, 6, 9, 11}};

// 1 - M(L) for 2x2x3 at L = 2, 3, 4.
inline const std::vector<std::pair<long long, long long>> kWalkOneMinusM = {{1, 12}, {2, 27}, {1, 48}};

// The two 3x3 generating sets.
inline const std::vector<std::vector<std::vector<int>>> kGenerating33 = {
    {{1, 5, 9}, {2, 6, 7}, {3, 4, 8}}, {{1, 6, 8}, {2, 4, 9}, {3, 5, 7}}};

// Expansion of the first 3x3 set: levels and powers of omega = exp(-2 pi i / 3).
struct FourierRow {
  std::vector<int> levels;
  std::vector<int> omega_powers;
};
inline const std::vector<FourierRow> kMeb33Set1 = {
    {{1, 5, 9}, {0, 0, 0}}, {{1, 5, 9}, {0, 1, 2}}, {{1, 5, 9}, {0, 2, 4}},
    {{2, 6, 7}, {0, 0, 0}}, {{2, 6, 7}, {0, 1, 2}}, {{2, 6, 7}, {0, 2, 4}},
    {{3, 4, 8}, {0, 0, 0}}, {{3, 4, 8}, {0, 1, 2}}, {{3, 4, 8}, {0, 2, 4}}};

}  // namespace entkit_test
