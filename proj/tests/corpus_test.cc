// Copyright 2026 The ocrkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "ocrkit/corpus.h"
#include "ocrkit/status.h"
#include "test_util.h"

namespace ocrkit {
namespace {

using testing::TempDir;

ErrorCode LoadError(const std::filesystem::path& p) {
  try {
    LoadManifest(p);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST(Manifest, EmptyFile) {
  TempDir dir;
  WriteFile(dir / "m.jsonl", "");
  const Manifest m = LoadManifest(dir / "m.jsonl");
  EXPECT_TRUE(m.entries.empty());
  EXPECT_EQ(m.dataset_label, "m");
}

TEST(Manifest, SortsEntries) {
  TempDir dir;
  WriteFile(dir / "m.jsonl",
            "{\"lang\":\"npi\",\"id\":\"npi/002\",\"ref_text\":\"ख\"}\n"
            "\n"
            "{\"lang\":\"npi\",\"id\":\"npi/001\",\"ref_text\":\"क\",\"dataset\":\"flores\"}\n");
  const Manifest m = LoadManifest(dir / "m.jsonl");
  ASSERT_EQ(m.entries.size(), 2u);
  EXPECT_EQ(m.entries[0].article_id, "npi/001");
  EXPECT_EQ(m.entries[1].article_id, "npi/002");
  EXPECT_EQ(m.dataset_label, "flores");
}

TEST(Manifest, DuplicateIdIsNamed) {
  TempDir dir;
  WriteFile(dir / "m.jsonl",
            "{\"lang\":\"khm\",\"id\":\"khm/007\",\"ref_text\":\"a\"}\n"
            "{\"lang\":\"khm\",\"id\":\"khm/007\",\"ref_text\":\"b\"}\n");
  try {
    LoadManifest(dir / "m.jsonl");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateId);
    EXPECT_NE(std::string(e.what()).find("khm/007"), std::string::npos);
  }
}

TEST(Manifest, MalformedLineNamesLine) {
  TempDir dir;
  WriteFile(dir / "m.jsonl",
            "{\"lang\":\"khm\",\"id\":\"a\",\"ref_text\":\"a\"}\n{not json\n");
  try {
    LoadManifest(dir / "m.jsonl");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kManifestParse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Manifest, MissingFieldIsParseError) {
  TempDir dir;
  WriteFile(dir / "m.jsonl", "{\"lang\":\"khm\",\"ref_text\":\"a\"}\n");
  EXPECT_EQ(LoadError(dir / "m.jsonl"), ErrorCode::kManifestParse);
}

TEST(Manifest, MissingReferencedFileNamesPath) {
  TempDir dir;
  WriteFile(dir / "m.jsonl",
            "{\"lang\":\"khm\",\"id\":\"a\",\"ref_path\":\"missing.txt\"}\n");
  try {
    LoadManifest(dir / "m.jsonl");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
    EXPECT_NE(std::string(e.what()).find("missing.txt"), std::string::npos);
  }
}

TEST(Manifest, InvalidUtf8) {
  TempDir dir;
  WriteFile(dir / "bad.txt", "ab\xc3");
  WriteFile(dir / "m.jsonl", "{\"lang\":\"khm\",\"id\":\"a\",\"ref_path\":\"bad.txt\"}\n");
  EXPECT_EQ(LoadError(dir / "m.jsonl"), ErrorCode::kInvalidUtf8);
}

TEST(Manifest, MissingManifestIsIo) {
  TempDir dir;
  EXPECT_EQ(LoadError(dir / "nope.jsonl"), ErrorCode::kIo);
}

TEST(Manifest, PathsResolveAgainstManifestDir) {
  TempDir dir;
  std::filesystem::create_directories(dir / "sub");
  WriteFile(dir / "sub/r.txt", "ref");
  WriteFile(dir / "sub/h.txt", "hyp");
  WriteFile(dir / "sub/m.jsonl",
            "{\"lang\":\"hin\",\"id\":\"1\",\"ref_path\":\"r.txt\",\"hyp_path\":\"h.txt\","
            "\"image_path\":\"p.png\"}\n");
  const Manifest m = LoadManifest(dir / "sub/m.jsonl");
  ASSERT_EQ(m.entries.size(), 1u);
  EXPECT_EQ(m.entries[0].reference_text, "ref");
  EXPECT_EQ(m.entries[0].hypothesis_text, "hyp");
  ASSERT_TRUE(m.entries[0].image_ref);
  EXPECT_EQ(std::filesystem::path(*m.entries[0].image_ref), dir / "sub/p.png");
}

TEST(Manifest, SaveLoadRoundTrip) {
  TempDir dir;
  Manifest m;
  m.dataset_label = "udhr";
  m.entries.push_back({"khm", "khm/1", "ដត\n", std::nullopt, std::string("ដដ")});
  m.entries.push_back({"pus", "pus/1", "ي \"q\"", std::nullopt, std::nullopt});
  SaveManifest(m, dir / "a.jsonl");
  const Manifest back = LoadManifest(dir / "a.jsonl");
  EXPECT_EQ(back.entries, m.entries);
  EXPECT_EQ(back.dataset_label, "udhr");
  SaveManifest(back, dir / "b.jsonl");
  EXPECT_EQ(ReadFile(dir / "a.jsonl"), ReadFile(dir / "b.jsonl"));
}

TEST(ValidateManifest, Warnings) {
  Manifest m;
  m.entries.push_back({"hin", "1", "x", std::nullopt, std::string("x")});
  EXPECT_TRUE(ValidateManifest(m).empty());

  m.entries.push_back({"zzz", "2", "x", std::nullopt, std::string("x")});
  auto w = ValidateManifest(m);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].code, "unknown-group");
  EXPECT_EQ(w[0].article_id, "2");

  m.entries.pop_back();
  m.entries.push_back({"hin", "3", "", std::nullopt, std::string("x")});
  w = ValidateManifest(m);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].code, "empty-reference");
}

}  // namespace
}  // namespace ocrkit
