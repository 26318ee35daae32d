#pragma once

#include "linepin/linespace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace linepin {

enum class BlockType { B2, B3Par, B3Cross, B4Par, B4Cross, B5 };

enum class SurroundingKind { Simplex4, TwoCritical, ThreeCritical, FourSegments, Star };

struct SurroundingCase {
    SurroundingKind kind;
    std::vector<int> sizes;   // TwoCritical: block sizes, largest first
    int triangles = 0;        // ThreeCritical / Star
    std::vector<std::vector<std::size_t>> simplices;
};

enum class OrthoClass {
    C1, C2a, C2b, C3a, C3b, C3c, C4a, C4b, C4c, C4d, C5a, C5b, C6a, C6b, C7, C8
};

struct Block {
    BlockType type;
    std::vector<std::size_t> members;   // indices into the input family
};

struct OrthoClassification {
    OrthoClass label;
    std::vector<Block> blocks;
};

std::string to_string(BlockType t);
std::string to_string(SurroundingKind k);
std::string to_string(OrthoClass c);
std::optional<OrthoClass> ortho_class_from_string(const std::string& s);

bool is_dependent(const std::vector<Constraint>& F);

bool is_critical_simplex(const Mat& X);
std::vector<std::size_t> find_critical_simplex(const Mat& X);
SurroundingCase decompose_surrounding(const Mat& X);

std::optional<BlockType> block_classify(const std::vector<Constraint>& F);
OrthoClassification classify_ortho_pinning(const std::vector<Constraint>& F);

bool detect_4pinning(const std::vector<Constraint>& F);

} // namespace linepin
