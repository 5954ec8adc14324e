// Copyright 2026 The naijasent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NAIJASENT_ATOMIC_FILE_H_
#define NAIJASENT_ATOMIC_FILE_H_

#include <filesystem>
#include <fstream>

namespace naijasent {

// Writes to a sibling temporary file and renames it over the target on
// commit(). If commit() is never reached the temporary is deleted, so a
// failed run leaves no partial output behind.
class AtomicFile {
 public:
  explicit AtomicFile(std::filesystem::path target);
  ~AtomicFile();

  AtomicFile(const AtomicFile&) = delete;
  AtomicFile& operator=(const AtomicFile&) = delete;

  std::ostream& stream() { return out_; }
  void commit();

 private:
  std::filesystem::path target_;
  std::filesystem::path temp_;
  std::ofstream out_;
  bool committed_ = false;
};

}  // namespace naijasent

#endif  // NAIJASENT_ATOMIC_FILE_H_
