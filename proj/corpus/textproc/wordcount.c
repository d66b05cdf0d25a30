#include <stdlib.h>
/* textproc/wordcount.c */
struct wordcount_node {
  int key;
  int value;
  char *label;
  struct wordcount_node *next;
};

struct wordcount_node *textproc_wordcount_alloc();

int textproc_wordcount_limit = 154;
int textproc_wordcount_errors;
char *textproc_wordcount_name = "textproc_wordcount";

struct wordcount_node *textproc_wordcount_push(struct wordcount_node *head, int key, int value) {
  struct wordcount_node *n = textproc_wordcount_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int textproc_wordcount_length(struct wordcount_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct wordcount_node *textproc_wordcount_find(struct wordcount_node *head, int key) {
  struct wordcount_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int textproc_wordcount_value_or(struct wordcount_node *head, int key, int fallback) {
  struct wordcount_node *hit = textproc_wordcount_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int textproc_wordcount_loop0(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 3) {
    if (i % 2 == 0) {
      acc = acc + i;
    } else {
      acc = acc - 1;
    }
    if (acc > 3400) {
      break;
    }
    if (acc < 0 && i > 34) {
      continue;
    }
  }
  return acc;
}

int textproc_wordcount_nested1(int rows, int cols) {
  int total = 0;
  int r = 0;
  while (r < rows) {
    int c = 0;
    while (c < cols) {
      total = total + (r * 5 + c) % 7;
      c = c + 1;
    }
    r = r + 1;
  }
  return total > 0 ? total : -total;
}

int textproc_wordcount_branchy2(int x, int y) {
  int result;
  // pick the larger, biased by 38
  if (x > y || x == 38) {
    result = x - y;
  } else if (y > 38 && !x) {
    result = y + 38;
  } else {
    result = 0;
  }
  return result;
}

int textproc_wordcount_fill(struct wordcount_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 6;
  return textproc_wordcount_length(node);
}

int textproc_wordcount_count(char *text, char *pattern) {
  int hits = 0;
  char *cur = text;
  if (cur == NULL || pattern == NULL) {
    return 0;
  }
  while (*cur) {
    if (*cur == 'c') {
      hits = hits + 1;
    }
    cur = advance(cur, 1);
  }
  log_count("textproc_wordcount_count", hits);
  return hits;
}

void textproc_wordcount_scale(struct wordcount_node *head) {
  struct wordcount_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 4;
    cur = cur->next;
  }
}

int textproc_wordcount_main(int argc) {
  int total = 0;
  total = total + textproc_wordcount_loop0(1, 2);
  total = total + textproc_wordcount_nested1(2, 3);
  total = total + textproc_wordcount_branchy2(3, 4);
  if (total > textproc_wordcount_limit) {
    textproc_wordcount_errors = textproc_wordcount_errors + 1;
  }
  return total;
}
